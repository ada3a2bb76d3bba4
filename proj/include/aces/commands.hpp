#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aces/aces_o.hpp"
#include "aces/pass_matrix.hpp"

namespace aces {

// Stable exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitTolerance = 2;
inline constexpr int kExitIo = 3;

struct RerankOptions {
  std::string matrix_path;
  std::optional<std::string> labels_path;  // overrides labels embedded in the matrix file
  std::optional<FileFormat> format;
  std::string method = "mv";  // mv | aces-c | aces-c-filter | aces-o
  std::vector<std::size_t> k_list;
  OptimizerConfig optimizer;
  std::optional<std::string> out_path;    // default: stdout
  std::optional<std::string> trace_out;   // aces-o convergence trace as CSV
  std::size_t passk_curve = 0;            // also report pass@k for k = 1..curve
  // Blend with externally supplied signals: a json file with a "quality"
  // vector (length n) and an n x n "consensus" matrix.
  std::optional<std::string> external_path;
  double external_alpha = 1.0;
  double external_beta = 1.0;
};

struct EvaluateOptions {
  std::string scores_path;  // rerank report (json) or a raw {"scores": [...]} file
  std::string labels_path;
  std::vector<std::size_t> k_list;
  std::string estimator = "rerank";  // rerank | unbiased
  std::optional<std::string> out_path;
};

struct SimulateOptions {
  std::string config_path;
  std::size_t trials = 1;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;
};

struct VerifyOptions {
  std::string suite;  // identity | bound | oracle | sign-recovery
  std::string config_path;
  std::optional<std::size_t> trials_override;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> out_path;
};

struct AnalyzeOptions {
  std::string matrix_path;
  std::optional<std::string> labels_path;
  std::optional<FileFormat> format;
  std::optional<std::string> out_path;
};

int cmd_rerank(const RerankOptions& options);
int cmd_evaluate(const EvaluateOptions& options);
int cmd_simulate(const SimulateOptions& options);
int cmd_verify(const VerifyOptions& options);
int cmd_analyze(const AnalyzeOptions& options);

}  // namespace aces
