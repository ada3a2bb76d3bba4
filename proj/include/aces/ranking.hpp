#pragma once

#include <cstdint>
#include <vector>

#include "aces/pass_matrix.hpp"

namespace aces {

struct WeightVector {
  std::vector<double> values;  // all >= 0, at least one > 0

  double sum() const;
  void validate(std::size_t m) const;
  WeightVector normalized() const;  // scaled to sum 1

  static WeightVector uniform(std::size_t m);

  bool operator==(const WeightVector&) const = default;
};

struct ScoreVector {
  std::vector<double> values;

  bool operator==(const ScoreVector&) const = default;
};

// Descending ranking with maximal equal-score runs recorded. Within a tie
// group the order is by ascending candidate index, but downstream Pass@k
// treats it as uniformly random.
struct Ranking {
  std::vector<std::size_t> order;        // candidate indices, score descending
  std::vector<std::size_t> group_sizes;  // contiguous partition of `order`

  bool operator==(const Ranking&) const = default;
};

struct LooAucVector {
  std::vector<double> values;             // in [0,1] where defined
  std::vector<std::uint8_t> defined;      // 0 for constant columns

  bool operator==(const LooAucVector&) const = default;
};

// Tie-aware AUC: (#{pos > neg} + 0.5 #{pos = neg}) / (n+ n-), computed by the
// rank-sum formulation with doubled midranks so it equals the pair-count
// definition exactly. Throws on single-class labels.
double auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels);

// s_i = sum_j w_j B_ij per row, with compensated (Kahan) accumulation so a row
// with k passing entries under uniform weights scores exactly fl(k * w).
ScoreVector weighted_scores(const PassMatrix& matrix, const WeightVector& weights);

// Leave-one-out scores S^(-j): the full compensated score minus w_j * B_ij.
// The subtraction form is the one the LOO-AUC tables are defined against; it
// is also the O(nm) path when sweeping all tests.
ScoreVector loo_scores(const PassMatrix& matrix, const WeightVector& weights, std::size_t j);

// LOO-AUC for every test: auc(S^(-j), column j). Constant columns are masked
// undefined rather than forced to 1/2.
LooAucVector loo_auc_all(const PassMatrix& matrix, const WeightVector& weights);

Ranking rank(const ScoreVector& scores);

// Exact expected Pass@k under uniformly random tie-breaking: walk the tie
// groups filling k slots; a straddling group with g members and c correct
// contributes failure factor C(g-c, s) / C(g, s) for its s slots.
double pass_at_k_rerank(const Ranking& ranking, const LabelVector& labels, std::size_t k);

// 1 - C(n-c, k) / C(n, k), evaluated as an incremental ratio product so it is
// overflow-safe at n in the hundreds.
double pass_at_k_unbiased(std::size_t n, std::size_t correct, std::size_t k);

}  // namespace aces
