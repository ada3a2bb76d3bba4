#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "aces/pass_matrix.hpp"
#include "aces/ranking.hpp"

namespace aces {

enum class LabelMode { bernoulli, exact_count };

// Class-conditional generative model: candidate i is correct with fraction
// pi; entry (i, j) ~ Bernoulli(alpha_j) for correct rows, Bernoulli(beta_j)
// otherwise. Each test column draws from its own derived stream, so column j
// is reproducible independently of m.
struct GenerativeConfig {
  std::size_t n = 0;
  double pi = 0.5;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::uint64_t seed = 0;
  LabelMode label_mode = LabelMode::exact_count;

  std::size_t m() const { return alpha.size(); }
  double delta(std::size_t j) const { return alpha[j] - beta[j]; }
  double delta_bar() const;
  double marginal_pass_rate(std::size_t j) const { return pi * alpha[j] + (1.0 - pi) * beta[j]; }

  void validate() const;
};

struct SampledInstance {
  PassMatrix matrix;
  LabelVector labels;
};

SampledInstance sample_matrix(const GenerativeConfig& cfg);

struct TestProfile {
  double alpha_hat = 0.0;
  double beta_hat = 0.0;
  double delta_hat = 0.0;
  double p_hat = 0.0;
};

std::vector<TestProfile> estimate_profiles(const PassMatrix& matrix, const LabelVector& labels);

// Mean signal M(w) = sum_j w_j delta_j and signal-to-noise R(w) = M^2 / sum w_j^2.
struct Snr {
  double mean_signal = 0.0;
  double ratio = 0.0;
};

Snr snr(const WeightVector& weights, const std::vector<double>& deltas);

// w*_j = max(0, delta_j); maximizes R over non-negative weights.
WeightVector oracle_weights(const std::vector<double>& deltas);

// max(0, 1 - (n-/k) exp(-R(w)/2)); requires M(w) > 0.
double passk_lower_bound(const WeightVector& weights, const std::vector<double>& deltas,
                         std::size_t n_minus, std::size_t k);
double passk_lower_bound_real(const WeightVector& weights, const std::vector<double>& deltas,
                              double n_minus, std::size_t k);

// Average-quality condition: delta_bar > 2 sqrt(ln 2 / m), strict.
double assumption_threshold(std::size_t m);
bool assumption_check(double delta_bar, std::size_t m);

// Identity coefficient c_j(w) = pi (1 - pi) / (p_j (1 - p_j)) * (A^(-j) - 1/2).
double coefficient_c(double pi, double p_j, double a_minus_j);

struct IdentityTestReport {
  double delta = 0.0;              // population delta_j
  double lhs_excess = 0.0;         // MC mean of LOO-AUC_j - 1/2
  double lhs_se = 0.0;
  double a_minus_j = 0.0;          // MC mean of the leave-one-out true AUC
  double a_minus_j_se = 0.0;
  double rhs = 0.0;                // c_j * delta_j with A^(-j) estimated
  double combined_se = 0.0;        // conservative: lhs_se + propagated rhs se
  double gap = 0.0;
  bool within_3_sigma = false;
  bool sign_matches = false;       // evaluated when |delta| >= 0.1
  std::size_t defined_trials = 0;
};

struct IdentityReport {
  std::vector<IdentityTestReport> tests;
  std::size_t trials = 0;
  std::size_t within_count = 0;    // tests passing the 3-sigma gap check
  bool signs_ok = true;            // all |delta| >= 0.1 tests have matching sign
};

// Monte-Carlo check of the LOO-AUC identity: E[LOO-AUC_j(w)] - 1/2 against
// c_j(w) delta_j, with A^(-j) itself estimated from the labeled samples.
// Population pi and p_j come from the config.
IdentityReport verify_loo_identity(const GenerativeConfig& cfg, const WeightVector& weights,
                                   std::size_t trials);

struct VoteStats {
  std::size_t informative = 0;    // h = +1
  std::size_t uninformative = 0;  // h = 0
  std::size_t misleading = 0;     // h = -1
  double informative_fraction() const;
  double uninformative_fraction() const;
  double misleading_fraction() const;
  double informative_to_misleading_ratio() const;  // +inf when no misleading votes
  std::size_t total() const { return informative + uninformative + misleading; }
};

// Classifies every (correct, incorrect, test) triple by its pairwise vote.
VoteStats vote_statistics(const PassMatrix& matrix, const LabelVector& labels);

struct SignRecoveryReport {
  // Cross-tabulation of sign(ACES-C weight > 0) against sign(delta_j > 0),
  // aggregated over trials; tests with delta_j == 0 are excluded.
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
  // Stratified by |delta|.
  std::size_t strong_total = 0, strong_errors = 0;    // |delta| >= 0.2
  std::size_t weak_total = 0, weak_errors = 0;        // |delta| < 0.1
  std::size_t strong_informative_total = 0, strong_informative_hit = 0;

  double informative_recall_strong() const;  // recall among delta >= 0.2
  double error_rate_strong() const;
  double error_rate_weak() const;
};

SignRecoveryReport sign_recovery_report(const GenerativeConfig& cfg, std::size_t trials);

}  // namespace aces
