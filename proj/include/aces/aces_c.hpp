#pragma once

#include <string>
#include <vector>

#include "aces/pass_matrix.hpp"
#include "aces/ranking.hpp"

namespace aces {

// Closed-form weighting: one LOO-AUC sweep under uniform weights, then
// w_j = max(0, LOO-AUC_j - 1/2) * p_j (1 - p_j). No tunable parameters.
struct AcesCResult {
  LooAucVector loo;              // under uniform weights
  std::vector<double> pass_rates;
  WeightVector weights_raw;      // closed-form weights; masked tests get 0
  WeightVector weights_normalized;  // scaled to sum 1 for display
  ScoreVector scores;            // under normalized weights
  Ranking ranking;
  bool uninformative = false;    // all weights zero; fell back to majority vote
};

AcesCResult aces_c(const PassMatrix& matrix);

// Selection-only ablation: uniform weight 1/m' over tests with
// LOO-AUC_j(w_unif) > 1/2, zero elsewhere.
struct AcesCFilterResult {
  LooAucVector loo;
  WeightVector weights;
  ScoreVector scores;
  Ranking ranking;
  std::size_t retained = 0;
  bool uninformative = false;  // nothing retained; fell back to majority vote
};

AcesCFilterResult aces_c_filter(const PassMatrix& matrix);

// Linear blend with externally supplied signals:
//   r = (alpha I + (1 - alpha) P) (beta s + (1 - beta) q)
// where s are scores normalized into [0,1], q is a per-candidate quality
// vector and P an n x n consensus matrix, both opaque inputs.
std::vector<double> combine_external(const std::vector<double>& scores,
                                     const std::vector<double>& quality,
                                     const std::vector<std::vector<double>>& consensus,
                                     double alpha, double beta);

}  // namespace aces
