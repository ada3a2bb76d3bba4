#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aces/pass_matrix.hpp"
#include "aces/ranking.hpp"
#include "aces/rng.hpp"

namespace aces::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ACES_FIXTURE_DIR) + "/" + name;
}

inline LoadedMatrix load_fixture(const std::string& name) {
  return load_pass_matrix_file(fixture_path(name), FileFormat::json);
}

// Independent oracle for the tie-aware AUC: literal enumeration of all
// positive-negative pairs. Kept separate from the rank-sum implementation on
// purpose.
inline double auc_pair_oracle(const std::vector<double>& scores,
                              const std::vector<std::uint8_t>& labels) {
  double wins2 = 0.0;  // doubled so ties stay integral
  std::size_t n_pos = 0, n_neg = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!labels[i]) continue;
    ++n_pos;
    for (std::size_t k = 0; k < scores.size(); ++k) {
      if (labels[k]) continue;
      if (scores[i] > scores[k])
        wins2 += 2.0;
      else if (scores[i] == scores[k])
        wins2 += 1.0;
    }
  }
  for (std::uint8_t y : labels) n_neg += y ? 0 : 1;
  return wins2 / (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

// Monte-Carlo oracle for Pass@k under uniformly random tie-breaking: shuffle
// within tie groups and count how often a correct candidate lands in the
// top k.
inline double passk_shuffle_oracle(const Ranking& ranking, const LabelVector& labels,
                                   std::size_t k, std::size_t shuffles, Rng& rng) {
  std::size_t hits = 0;
  std::vector<std::size_t> draw(ranking.order);
  for (std::size_t s = 0; s < shuffles; ++s) {
    std::size_t pos = 0;
    for (std::size_t g : ranking.group_sizes) {
      for (std::size_t i = g; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.uniform_int(i));
        std::swap(draw[pos + i - 1], draw[pos + j]);
      }
      pos += g;
    }
    bool hit = false;
    for (std::size_t t = 0; t < k && !hit; ++t) hit = labels.values[draw[t]] != 0;
    hits += hit ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(shuffles);
}

inline PassMatrix make_matrix(std::vector<std::vector<int>> rows) {
  PassMatrix pm;
  pm.n = rows.size();
  pm.m = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < pm.n; ++i) pm.candidate_ids.push_back("c" + std::to_string(i));
  for (std::size_t j = 0; j < pm.m; ++j) pm.test_ids.push_back("t" + std::to_string(j));
  for (const auto& row : rows)
    for (int v : row) pm.entries.push_back(static_cast<std::uint8_t>(v));
  return pm;
}

inline PassMatrix random_matrix(Rng& rng, std::size_t n, std::size_t m) {
  PassMatrix pm;
  pm.n = n;
  pm.m = m;
  for (std::size_t i = 0; i < n; ++i) pm.candidate_ids.push_back("c" + std::to_string(i));
  for (std::size_t j = 0; j < m; ++j) pm.test_ids.push_back("t" + std::to_string(j));
  pm.entries.resize(n * m);
  for (auto& e : pm.entries) e = rng.bernoulli(0.5) ? 1 : 0;
  return pm;
}

}  // namespace aces::testing
