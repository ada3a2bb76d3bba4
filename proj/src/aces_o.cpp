#include "aces/aces_o.hpp"

#include <algorithm>
#include <cmath>

namespace aces {

namespace {

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

WeightVector softmax(const std::vector<double>& logits) {
  WeightVector w;
  w.values.resize(logits.size());
  const double top = *std::max_element(logits.begin(), logits.end());
  double z = 0.0;
  for (std::size_t j = 0; j < logits.size(); ++j) {
    w.values[j] = std::exp(logits[j] - top);
    z += w.values[j];
  }
  for (double& v : w.values) v /= z;
  return w;
}

struct Evaluation {
  double objective = 0.0;
  std::vector<double> grad_logits;  // empty unless requested
};

// One sweep over all tests: surrogate objective and, optionally, its exact
// logit gradient. Pair terms are reduced in fixed row-major order.
Evaluation evaluate(const PassMatrix& matrix, const std::vector<double>& logits, double gamma,
                    bool want_gradient) {
  const std::size_t n = matrix.n;
  const std::size_t m = matrix.m;
  const WeightVector w = softmax(logits);
  const ScoreVector full = weighted_scores(matrix, w);

  Evaluation eval;
  std::vector<double> dj_dw(m, 0.0);
  std::vector<double> loo(n), row_coeff(n);
  std::vector<std::size_t> passers, failers;

  for (std::size_t j = 0; j < m; ++j) {
    passers.clear();
    failers.clear();
    for (std::size_t i = 0; i < n; ++i) (matrix.at(i, j) ? passers : failers).push_back(i);
    if (passers.empty() || failers.empty()) continue;  // masked

    for (std::size_t i = 0; i < n; ++i)
      loo[i] = full.values[i] - w.values[j] * matrix.at(i, j);

    std::fill(row_coeff.begin(), row_coeff.end(), 0.0);
    double sig_sum = 0.0;
    for (std::size_t i : passers) {
      for (std::size_t k : failers) {
        const double sig = logistic(gamma * (loo[i] - loo[k]));
        sig_sum += sig;
        if (want_gradient) {
          const double g = sig * (1.0 - sig);
          row_coeff[i] += g;
          row_coeff[k] -= g;
        }
      }
    }
    const double pairs = static_cast<double>(passers.size()) * static_cast<double>(failers.size());
    const double surrogate = sig_sum / pairs;
    eval.objective += w.values[j] * (surrogate - 0.5);
    dj_dw[j] += surrogate - 0.5;

    if (want_gradient) {
      const double scale = gamma * w.values[j] / pairs;
      for (std::size_t i = 0; i < n; ++i) {
        if (row_coeff[i] == 0.0) continue;
        const double c = scale * row_coeff[i];
        const std::uint8_t* row = matrix.entries.data() + i * m;
        for (std::size_t r = 0; r < m; ++r) {
          if (r == j || !row[r]) continue;  // S^(-j) does not depend on w_j
          dj_dw[r] += c;
        }
      }
    }
  }

  if (want_gradient) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m; ++r) mean += w.values[r] * dj_dw[r];
    eval.grad_logits.resize(m);
    for (std::size_t s = 0; s < m; ++s)
      eval.grad_logits[s] = w.values[s] * (dj_dw[s] - mean);
  }
  return eval;
}

std::optional<double> trace_auc(const PassMatrix& full_matrix, const WeightVector& w,
                                const std::optional<LabelVector>& labels) {
  if (!labels) return std::nullopt;
  const std::size_t pos = labels->n_pos();
  if (pos == 0 || pos == labels->values.size()) return std::nullopt;
  return auc(weighted_scores(full_matrix, w).values, labels->values);
}

}  // namespace

void OptimizerConfig::validate() const {
  if (!(gamma > 0.0)) throw ValidationError("gamma must be positive");
  if (!(eta > 0.0)) throw ValidationError("eta must be positive");
  if (moment_decay_1 <= 0.0 || moment_decay_1 >= 1.0 || moment_decay_2 <= 0.0 ||
      moment_decay_2 >= 1.0)
    throw ValidationError("moment decays must lie in (0, 1)");
  if (!(epsilon_stability > 0.0)) throw ValidationError("epsilon_stability must be positive");
}

double surrogate_loo_auc(const PassMatrix& matrix, const WeightVector& weights, std::size_t j,
                         double gamma) {
  weights.validate(matrix.m);
  if (j >= matrix.m) throw ValidationError("test index out of range");
  if (!(gamma > 0.0)) throw ValidationError("gamma must be positive");
  if (matrix.column_constant(j))
    throw ValidationError("surrogate LOO-AUC undefined for constant column " + std::to_string(j));

  const ScoreVector loo = loo_scores(matrix, weights, j);
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < matrix.n; ++i) {
    if (!matrix.at(i, j)) continue;
    for (std::size_t k = 0; k < matrix.n; ++k) {
      if (matrix.at(k, j)) continue;
      sum += logistic(gamma * (loo.values[i] - loo.values[k]));
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

double objective(const PassMatrix& matrix, const std::vector<double>& logits, double gamma) {
  if (logits.size() != matrix.m) throw ValidationError("logits length does not match m");
  return evaluate(matrix, logits, gamma, false).objective;
}

std::vector<double> objective_gradient(const PassMatrix& matrix, const std::vector<double>& logits,
                                       double gamma) {
  if (logits.size() != matrix.m) throw ValidationError("logits length does not match m");
  return evaluate(matrix, logits, gamma, true).grad_logits;
}

AcesOResult aces_o(const PassMatrix& matrix, const OptimizerConfig& cfg,
                   const std::optional<LabelVector>& labels) {
  cfg.validate();
  if (labels && labels->values.size() != matrix.n)
    throw ValidationError("labels length does not match n");

  // Optimize on the shortlist when pre-filtering is enabled; final weights
  // still score the full pool.
  PassMatrix work = matrix;
  if (cfg.prefilter_k > 0 && cfg.prefilter_k < matrix.n)
    work = prefilter_top_k(matrix, cfg.prefilter_k).submatrix;

  AcesOResult result;
  result.masked.assign(matrix.m, 0);
  for (std::size_t j = 0; j < matrix.m; ++j) result.masked[j] = work.column_constant(j) ? 1 : 0;

  result.logits.assign(matrix.m, 0.0);
  std::vector<double> mom1(matrix.m, 0.0), mom2(matrix.m, 0.0);

  Evaluation eval = evaluate(work, result.logits, cfg.gamma, cfg.steps > 0);
  {
    WeightVector w = softmax(result.logits);
    result.trace.push_back({eval.objective, w, trace_auc(matrix, w, labels)});
  }

  for (std::size_t t = 1; t <= cfg.steps; ++t) {
    const double corr1 = 1.0 - std::pow(cfg.moment_decay_1, static_cast<double>(t));
    const double corr2 = 1.0 - std::pow(cfg.moment_decay_2, static_cast<double>(t));
    for (std::size_t s = 0; s < matrix.m; ++s) {
      const double g = eval.grad_logits[s];
      mom1[s] = cfg.moment_decay_1 * mom1[s] + (1.0 - cfg.moment_decay_1) * g;
      mom2[s] = cfg.moment_decay_2 * mom2[s] + (1.0 - cfg.moment_decay_2) * g * g;
      result.logits[s] +=
          cfg.eta * (mom1[s] / corr1) / (std::sqrt(mom2[s] / corr2) + cfg.epsilon_stability);
    }
    eval = evaluate(work, result.logits, cfg.gamma, t < cfg.steps);
    WeightVector w = softmax(result.logits);
    result.trace.push_back({eval.objective, w, trace_auc(matrix, w, labels)});
  }

  result.weights = softmax(result.logits);
  result.scores = weighted_scores(matrix, result.weights);
  result.ranking = rank(result.scores);
  return result;
}

}  // namespace aces
