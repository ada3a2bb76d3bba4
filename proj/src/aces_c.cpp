#include "aces/aces_c.hpp"

#include <algorithm>

namespace aces {

namespace {

std::vector<double> empirical_pass_rates(const PassMatrix& matrix) {
  std::vector<double> p(matrix.m);
  for (std::size_t j = 0; j < matrix.m; ++j)
    p[j] = static_cast<double>(matrix.col_sum(j)) / static_cast<double>(matrix.n);
  return p;
}

}  // namespace

AcesCResult aces_c(const PassMatrix& matrix) {
  const WeightVector unif = WeightVector::uniform(matrix.m);

  AcesCResult result;
  result.loo = loo_auc_all(matrix, unif);
  result.pass_rates = empirical_pass_rates(matrix);

  result.weights_raw.values.assign(matrix.m, 0.0);
  bool any_positive = false;
  for (std::size_t j = 0; j < matrix.m; ++j) {
    if (!result.loo.defined[j]) continue;
    const double excess = std::max(0.0, result.loo.values[j] - 0.5);
    const double w = excess * result.pass_rates[j] * (1.0 - result.pass_rates[j]);
    result.weights_raw.values[j] = w;
    any_positive |= w > 0.0;
  }

  if (!any_positive) {
    // A reranker should still return a ranking; fall back to majority vote
    // and let the caller surface the flag.
    result.uninformative = true;
    result.weights_raw = unif;
  }
  result.weights_normalized = result.weights_raw.normalized();
  result.scores = weighted_scores(matrix, result.weights_normalized);
  result.ranking = rank(result.scores);
  return result;
}

AcesCFilterResult aces_c_filter(const PassMatrix& matrix) {
  const WeightVector unif = WeightVector::uniform(matrix.m);

  AcesCFilterResult result;
  result.loo = loo_auc_all(matrix, unif);

  std::vector<std::size_t> retained;
  for (std::size_t j = 0; j < matrix.m; ++j)
    if (result.loo.defined[j] && result.loo.values[j] > 0.5) retained.push_back(j);
  result.retained = retained.size();

  result.weights.values.assign(matrix.m, 0.0);
  if (retained.empty()) {
    result.uninformative = true;
    result.weights = unif;
  } else {
    const double w = 1.0 / static_cast<double>(retained.size());
    for (std::size_t j : retained) result.weights.values[j] = w;
  }
  result.scores = weighted_scores(matrix, result.weights);
  result.ranking = rank(result.scores);
  return result;
}

std::vector<double> combine_external(const std::vector<double>& scores,
                                     const std::vector<double>& quality,
                                     const std::vector<std::vector<double>>& consensus,
                                     double alpha, double beta) {
  const std::size_t n = scores.size();
  if (quality.size() != n) throw ValidationError("quality vector length does not match scores");
  if (consensus.size() != n) throw ValidationError("consensus matrix must be n x n");
  for (const auto& row : consensus)
    if (row.size() != n) throw ValidationError("consensus matrix must be n x n");
  if (alpha < 0.0 || alpha > 1.0 || beta < 0.0 || beta > 1.0)
    throw ValidationError("alpha and beta must lie in [0, 1]");

  std::vector<double> blended(n);
  for (std::size_t i = 0; i < n; ++i) blended[i] = beta * scores[i] + (1.0 - beta) * quality[i];

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double consensus_term = 0.0;
    for (std::size_t k = 0; k < n; ++k) consensus_term += consensus[i][k] * blended[k];
    out[i] = alpha * blended[i] + (1.0 - alpha) * consensus_term;
  }
  return out;
}

}  // namespace aces
