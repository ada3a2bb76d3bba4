#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aces/pass_matrix.hpp"
#include "aces/ranking.hpp"

namespace aces {

inline constexpr int kReportSchemaVersion = 1;

// FNV-1a 64-bit; used for config/fixture content hashes in manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct PassAtK {
  std::size_t k = 0;
  double value = 0.0;
};

// Machine-readable result of one rerank run. Serialization is key-ordered and
// timestamp-free so identical runs produce identical bytes.
struct RerankReport {
  std::string method;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::string> candidate_ids;
  std::vector<std::string> test_ids;
  std::vector<std::string> warnings;
  std::vector<std::string> removed_tests;
  std::vector<double> pass_rates;
  LooAucVector loo;
  WeightVector weights_raw;
  WeightVector weights_normalized;
  ScoreVector scores;
  Ranking ranking;
  std::optional<double> auc_vs_labels;
  std::vector<PassAtK> pass_at_k;

  nlohmann::ordered_json to_json() const;
};

}  // namespace aces
