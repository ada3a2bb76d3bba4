#include "aces/theory_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aces/aces_c.hpp"
#include "aces/rng.hpp"

namespace aces {

double GenerativeConfig::delta_bar() const {
  double s = 0.0;
  for (std::size_t j = 0; j < m(); ++j) s += delta(j);
  return s / static_cast<double>(m());
}

void GenerativeConfig::validate() const {
  if (n < 2) throw ValidationError("generative config needs n >= 2");
  if (alpha.empty() || alpha.size() != beta.size())
    throw ValidationError("alpha and beta must be non-empty and equal length");
  if (pi < 0.0 || pi > 1.0) throw ValidationError("pi must lie in [0, 1]");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0.0 || alpha[j] > 1.0 || beta[j] < 0.0 || beta[j] > 1.0)
      throw ValidationError("class-conditional pass rates must lie in [0, 1] (test " +
                            std::to_string(j) + ")");
  }
}

SampledInstance sample_matrix(const GenerativeConfig& cfg) {
  cfg.validate();

  SampledInstance out;
  out.labels.values.assign(cfg.n, 0);
  Rng label_rng = Rng::derive(cfg.seed, 0);
  if (cfg.label_mode == LabelMode::bernoulli) {
    for (std::size_t i = 0; i < cfg.n; ++i)
      out.labels.values[i] = label_rng.bernoulli(cfg.pi) ? 1 : 0;
  } else {
    const std::size_t n_pos = static_cast<std::size_t>(
        std::lround(cfg.pi * static_cast<double>(cfg.n)));
    std::vector<std::size_t> idx(cfg.n);
    std::iota(idx.begin(), idx.end(), 0);
    label_rng.shuffle(idx);
    for (std::size_t i = 0; i < n_pos; ++i) out.labels.values[idx[i]] = 1;
  }

  PassMatrix& pm = out.matrix;
  pm.n = cfg.n;
  pm.m = cfg.m();
  pm.entries.assign(pm.n * pm.m, 0);
  for (std::size_t i = 0; i < pm.n; ++i) pm.candidate_ids.push_back("c" + std::to_string(i));
  for (std::size_t j = 0; j < pm.m; ++j) pm.test_ids.push_back("t" + std::to_string(j));

  // One stream per column so column j is the same no matter how many other
  // tests the config carries.
  for (std::size_t j = 0; j < pm.m; ++j) {
    Rng col_rng = Rng::derive(cfg.seed, j + 1);
    for (std::size_t i = 0; i < pm.n; ++i) {
      const double p = out.labels.values[i] ? cfg.alpha[j] : cfg.beta[j];
      pm.entries[i * pm.m + j] = col_rng.bernoulli(p) ? 1 : 0;
    }
  }
  return out;
}

std::vector<TestProfile> estimate_profiles(const PassMatrix& matrix, const LabelVector& labels) {
  if (labels.values.size() != matrix.n) throw ValidationError("labels length does not match n");
  const std::size_t n_pos = labels.n_pos();
  const std::size_t n_neg = labels.n_neg();
  if (n_pos == 0 || n_neg == 0) throw ValidationError("profiles undefined: single-class labels");

  std::vector<TestProfile> out(matrix.m);
  for (std::size_t j = 0; j < matrix.m; ++j) {
    std::size_t pos_pass = 0, neg_pass = 0;
    for (std::size_t i = 0; i < matrix.n; ++i) {
      if (labels.values[i])
        pos_pass += matrix.at(i, j);
      else
        neg_pass += matrix.at(i, j);
    }
    TestProfile& p = out[j];
    p.alpha_hat = static_cast<double>(pos_pass) / static_cast<double>(n_pos);
    p.beta_hat = static_cast<double>(neg_pass) / static_cast<double>(n_neg);
    p.delta_hat = p.alpha_hat - p.beta_hat;
    p.p_hat = static_cast<double>(pos_pass + neg_pass) / static_cast<double>(matrix.n);
  }
  return out;
}

Snr snr(const WeightVector& weights, const std::vector<double>& deltas) {
  weights.validate(deltas.size());
  Snr out;
  double sq = 0.0;
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    out.mean_signal += weights.values[j] * deltas[j];
    sq += weights.values[j] * weights.values[j];
  }
  out.ratio = out.mean_signal * out.mean_signal / sq;
  return out;
}

WeightVector oracle_weights(const std::vector<double>& deltas) {
  WeightVector w;
  w.values.reserve(deltas.size());
  bool any = false;
  for (double d : deltas) {
    w.values.push_back(std::max(0.0, d));
    any |= d > 0.0;
  }
  if (!any) throw ValidationError("oracle undefined: no test has positive discriminative power");
  return w;
}

double passk_lower_bound_real(const WeightVector& weights, const std::vector<double>& deltas,
                              double n_minus, std::size_t k) {
  if (k < 1) throw ValidationError("k must be at least 1");
  const Snr s = snr(weights, deltas);
  if (!(s.mean_signal > 0.0))
    throw ValidationError("bound requires positive mean signal");
  const double bound = 1.0 - n_minus / static_cast<double>(k) * std::exp(-s.ratio / 2.0);
  return std::max(0.0, bound);
}

double passk_lower_bound(const WeightVector& weights, const std::vector<double>& deltas,
                         std::size_t n_minus, std::size_t k) {
  return passk_lower_bound_real(weights, deltas, static_cast<double>(n_minus), k);
}

double assumption_threshold(std::size_t m) {
  if (m < 1) throw ValidationError("m must be at least 1");
  return 2.0 * std::sqrt(std::log(2.0) / static_cast<double>(m));
}

bool assumption_check(double delta_bar, std::size_t m) {
  return delta_bar > assumption_threshold(m);
}

double coefficient_c(double pi, double p_j, double a_minus_j) {
  if (!(pi > 0.0 && pi < 1.0)) throw ValidationError("pi must lie strictly inside (0, 1)");
  if (!(p_j > 0.0 && p_j < 1.0)) throw ValidationError("p_j must lie strictly inside (0, 1)");
  return pi * (1.0 - pi) / (p_j * (1.0 - p_j)) * (a_minus_j - 0.5);
}

IdentityReport verify_loo_identity(const GenerativeConfig& cfg, const WeightVector& weights,
                                   std::size_t trials) {
  cfg.validate();
  weights.validate(cfg.m());
  if (cfg.pi <= 0.0 || cfg.pi >= 1.0)
    throw ValidationError("identity check needs pi strictly inside (0, 1)");
  if (trials < 1000) throw ValidationError("identity check needs at least 1000 trials");

  const std::size_t m = cfg.m();
  std::vector<double> loo_sum(m, 0.0), loo_sq(m, 0.0);
  std::vector<double> a_sum(m, 0.0), a_sq(m, 0.0);
  std::vector<std::size_t> count(m, 0);

  for (std::size_t t = 0; t < trials; ++t) {
    GenerativeConfig trial_cfg = cfg;
    trial_cfg.seed = Rng::derive(cfg.seed, t).next();
    const SampledInstance inst = sample_matrix(trial_cfg);

    std::vector<std::uint8_t> column(inst.matrix.n);
    for (std::size_t j = 0; j < m; ++j) {
      if (inst.matrix.column_constant(j)) continue;
      // Re-summed leave-one-out scores: under uniform weights equal remaining
      // vote counts tie exactly, so the estimator carries no tie-break bias.
      const ScoreVector loo = loo_scores(inst.matrix, weights, j);
      for (std::size_t i = 0; i < inst.matrix.n; ++i) column[i] = inst.matrix.at(i, j);
      const double loo_auc = auc(loo.values, column);
      const double a_true = auc(loo.values, inst.labels.values);
      loo_sum[j] += loo_auc;
      loo_sq[j] += loo_auc * loo_auc;
      a_sum[j] += a_true;
      a_sq[j] += a_true * a_true;
      ++count[j];
    }
  }

  IdentityReport report;
  report.trials = trials;

  // pi here is the realized correct fraction. exact_count
  // pins it; under bernoulli labels the configured rate is the expectation.
  const double pi = cfg.label_mode == LabelMode::exact_count
                        ? std::lround(cfg.pi * static_cast<double>(cfg.n)) /
                              static_cast<double>(cfg.n)
                        : cfg.pi;

  for (std::size_t j = 0; j < m; ++j) {
    IdentityTestReport r;
    r.delta = cfg.delta(j);
    r.defined_trials = count[j];
    if (count[j] >= 2) {
      const double nt = static_cast<double>(count[j]);
      const double loo_mean = loo_sum[j] / nt;
      const double loo_var = std::max(0.0, loo_sq[j] / nt - loo_mean * loo_mean);
      r.lhs_excess = loo_mean - 0.5;
      r.lhs_se = std::sqrt(loo_var / nt);
      r.a_minus_j = a_sum[j] / nt;
      const double a_var = std::max(0.0, a_sq[j] / nt - r.a_minus_j * r.a_minus_j);
      r.a_minus_j_se = std::sqrt(a_var / nt);

      const double p_j = cfg.marginal_pass_rate(j);
      const double coef_scale = pi * (1.0 - pi) / (p_j * (1.0 - p_j));
      r.rhs = coef_scale * (r.a_minus_j - 0.5) * r.delta;
      r.combined_se = r.lhs_se + std::abs(coef_scale * r.delta) * r.a_minus_j_se;
      r.gap = std::abs(r.lhs_excess - r.rhs);
      r.within_3_sigma = r.gap <= 3.0 * r.combined_se;
      if (std::abs(r.delta) >= 0.1) {
        r.sign_matches = (r.lhs_excess > 0.0) == (r.delta > 0.0);
        report.signs_ok &= r.sign_matches;
      } else {
        r.sign_matches = true;
      }
      report.within_count += r.within_3_sigma ? 1 : 0;
    }
    report.tests.push_back(r);
  }
  return report;
}

double VoteStats::informative_fraction() const {
  return static_cast<double>(informative) / static_cast<double>(total());
}
double VoteStats::uninformative_fraction() const {
  return static_cast<double>(uninformative) / static_cast<double>(total());
}
double VoteStats::misleading_fraction() const {
  return static_cast<double>(misleading) / static_cast<double>(total());
}
double VoteStats::informative_to_misleading_ratio() const {
  if (misleading == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(informative) / static_cast<double>(misleading);
}

VoteStats vote_statistics(const PassMatrix& matrix, const LabelVector& labels) {
  if (labels.values.size() != matrix.n) throw ValidationError("labels length does not match n");
  const std::size_t n_pos = labels.n_pos();
  const std::size_t n_neg = labels.n_neg();
  if (n_pos == 0 || n_neg == 0) throw ValidationError("vote statistics need both classes");

  VoteStats stats;
  for (std::size_t j = 0; j < matrix.m; ++j) {
    std::size_t pos_pass = 0, neg_pass = 0;
    for (std::size_t i = 0; i < matrix.n; ++i) {
      if (labels.values[i])
        pos_pass += matrix.at(i, j);
      else
        neg_pass += matrix.at(i, j);
    }
    // h = +1 needs the correct one to pass and the incorrect one to fail.
    stats.informative += pos_pass * (n_neg - neg_pass);
    stats.misleading += (n_pos - pos_pass) * neg_pass;
    stats.uninformative += n_pos * n_neg - pos_pass * (n_neg - neg_pass) -
                           (n_pos - pos_pass) * neg_pass;
  }
  return stats;
}

double SignRecoveryReport::informative_recall_strong() const {
  if (strong_informative_total == 0) return 0.0;
  return static_cast<double>(strong_informative_hit) /
         static_cast<double>(strong_informative_total);
}
double SignRecoveryReport::error_rate_strong() const {
  if (strong_total == 0) return 0.0;
  return static_cast<double>(strong_errors) / static_cast<double>(strong_total);
}
double SignRecoveryReport::error_rate_weak() const {
  if (weak_total == 0) return 0.0;
  return static_cast<double>(weak_errors) / static_cast<double>(weak_total);
}

SignRecoveryReport sign_recovery_report(const GenerativeConfig& cfg, std::size_t trials) {
  cfg.validate();
  SignRecoveryReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    GenerativeConfig trial_cfg = cfg;
    trial_cfg.seed = Rng::derive(cfg.seed, t).next();
    const SampledInstance inst = sample_matrix(trial_cfg);
    const AcesCResult res = aces_c(inst.matrix);
    if (res.uninformative) continue;

    for (std::size_t j = 0; j < cfg.m(); ++j) {
      if (!res.loo.defined[j]) continue;
      const double d = cfg.delta(j);
      if (d == 0.0) continue;  // classified by noise; excluded
      const bool predicted = res.weights_raw.values[j] > 0.0;
      const bool actual = d > 0.0;
      if (predicted && actual) ++report.tp;
      if (predicted && !actual) ++report.fp;
      if (!predicted && actual) ++report.fn;
      if (!predicted && !actual) ++report.tn;

      const bool error = predicted != actual;
      if (std::abs(d) >= 0.2) {
        ++report.strong_total;
        report.strong_errors += error ? 1 : 0;
        if (actual) {
          ++report.strong_informative_total;
          report.strong_informative_hit += predicted ? 1 : 0;
        }
      } else if (std::abs(d) < 0.1) {
        ++report.weak_total;
        report.weak_errors += error ? 1 : 0;
      }
    }
  }
  return report;
}

}  // namespace aces
