#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aces/pass_matrix.hpp"
#include "aces/ranking.hpp"

namespace aces {

struct OptimizerConfig {
  double gamma = 10.0;  // surrogate sharpness
  double eta = 0.05;    // learning rate
  std::size_t steps = 300;
  std::size_t prefilter_k = 0;  // 0 = no candidate pre-filtering
  double moment_decay_1 = 0.9;
  double moment_decay_2 = 0.999;
  double epsilon_stability = 1e-8;
  std::uint64_t seed = 0;  // unused by the optimizer itself (full-batch); kept for manifests

  void validate() const;
};

struct TracePoint {
  double objective;
  WeightVector weights;
  std::optional<double> auc_vs_labels;
};

// steps + 1 entries; entry 0 is the initial (uniform) point.
using OptimizationTrace = std::vector<TracePoint>;

struct AcesOResult {
  std::vector<double> logits;
  WeightVector weights;  // softmax image: positive, sums to 1
  ScoreVector scores;    // over the full candidate pool
  Ranking ranking;
  OptimizationTrace trace;
  std::vector<std::uint8_t> masked;  // tests constant on the optimization matrix
};

// Logistic relaxation of LOO-AUC_j: mean of sigma(gamma (S_i - S_k)) over
// passer/failer pairs of column j. Requires a non-constant column.
double surrogate_loo_auc(const PassMatrix& matrix, const WeightVector& weights, std::size_t j,
                         double gamma);

// J(w) = sum_j w_j (surrogate LOO-AUC_j(w) - 1/2) with w = softmax(logits);
// constant columns contribute zero.
double objective(const PassMatrix& matrix, const std::vector<double>& logits, double gamma);

// Exact gradient of the surrogate objective with respect to the logits,
// including the softmax Jacobian and the dependence of every S^(-j) on w.
// Contract: agrees with central finite differences.
std::vector<double> objective_gradient(const PassMatrix& matrix, const std::vector<double>& logits,
                                       double gamma);

// Adam ascent from zero logits for cfg.steps iterations. With prefilter_k
// set, optimization runs on the top-K submatrix and the final weights score
// the full pool. Deterministic: the gradient is full-batch.
AcesOResult aces_o(const PassMatrix& matrix, const OptimizerConfig& cfg,
                   const std::optional<LabelVector>& labels = std::nullopt);

}  // namespace aces
