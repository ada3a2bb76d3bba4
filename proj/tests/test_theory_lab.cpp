#include <doctest.h>

#include <cmath>

#include "aces/theory_lab.hpp"
#include "helpers.hpp"

using namespace aces;
using aces::testing::load_fixture;
using aces::testing::make_matrix;

namespace {

GenerativeConfig basic_config() {
  GenerativeConfig cfg;
  cfg.n = 100;
  cfg.pi = 0.4;
  cfg.alpha = {0.9, 0.7, 0.5};
  cfg.beta = {0.3, 0.5, 0.5};
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("sample_matrix: degenerate and perfect configs") {
  SUBCASE("pi = 1 with alpha = 1 gives all ones and all-correct labels") {
    GenerativeConfig cfg;
    cfg.n = 10;
    cfg.pi = 1.0;
    cfg.alpha = {1.0, 1.0};
    cfg.beta = {0.0, 0.0};
    const SampledInstance inst = sample_matrix(cfg);
    CHECK(inst.labels.n_pos() == 10);
    for (std::uint8_t e : inst.matrix.entries) CHECK(e == 1);
  }
  SUBCASE("perfect tests give majority-vote AUC 1") {
    GenerativeConfig cfg;
    cfg.n = 40;
    cfg.pi = 0.5;
    cfg.alpha = {1.0, 1.0, 1.0};
    cfg.beta = {0.0, 0.0, 0.0};
    cfg.seed = 3;
    const SampledInstance inst = sample_matrix(cfg);
    const ScoreVector mv = weighted_scores(inst.matrix, WeightVector::uniform(3));
    CHECK(auc(mv.values, inst.labels.values) == 1.0);
  }
}

TEST_CASE("sample_matrix: determinism and exact-count labels") {
  GenerativeConfig cfg = basic_config();
  const SampledInstance a = sample_matrix(cfg);
  const SampledInstance b = sample_matrix(cfg);
  CHECK(a.matrix == b.matrix);
  CHECK(a.labels == b.labels);
  CHECK(a.labels.n_pos() == 40);  // exact_count pins round(pi * n)

  cfg.label_mode = LabelMode::bernoulli;
  cfg.seed = 9;
  const SampledInstance c = sample_matrix(cfg);
  CHECK(c.labels.values.size() == cfg.n);
}

TEST_CASE("sample_matrix: column streams do not depend on m") {
  GenerativeConfig small = basic_config();
  GenerativeConfig large = basic_config();
  large.alpha.push_back(0.8);
  large.beta.push_back(0.1);
  const SampledInstance a = sample_matrix(small);
  const SampledInstance b = sample_matrix(large);
  for (std::size_t i = 0; i < small.n; ++i)
    for (std::size_t j = 0; j < small.m(); ++j) CHECK(a.matrix.at(i, j) == b.matrix.at(i, j));
}

TEST_CASE("sample_matrix: marginal pass rate concentrates at pi*alpha + (1-pi)*beta") {
  GenerativeConfig cfg;
  cfg.n = 10000;
  cfg.pi = 0.4;
  cfg.alpha = {0.9};
  cfg.beta = {0.3};
  cfg.seed = 13;
  const SampledInstance inst = sample_matrix(cfg);
  const double p_hat = static_cast<double>(inst.matrix.col_sum(0)) / 10000.0;
  const double p = 0.54;
  const double se = std::sqrt(p * (1.0 - p) / 10000.0);
  CHECK(std::abs(p_hat - p) <= 3.0 * se);
}

TEST_CASE("estimate_profiles on the fixtures") {
  SUBCASE("easy fixture delta row in natural order") {
    const LoadedMatrix easy = load_fixture("easy_8x10.json");
    const auto profiles = estimate_profiles(easy.matrix, *easy.labels);
    const double expected[] = {1.0, 7.0 / 15, 7.0 / 15, 7.0 / 15, 7.0 / 15,
                               2.0 / 15, 7.0 / 15, 2.0 / 15, -1.0, -1.0};
    for (std::size_t j = 0; j < 10; ++j)
      CHECK(profiles[j].delta_hat == doctest::Approx(expected[j]).epsilon(1e-12));
  }
  SUBCASE("hard fixture endpoints") {
    const LoadedMatrix hard = load_fixture("hard_8x10.json");
    const auto profiles = estimate_profiles(hard.matrix, *hard.labels);
    CHECK(profiles[0].delta_hat == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(profiles[9].delta_hat == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("identical columns have identical profiles") {
    const PassMatrix pm = make_matrix({{1, 1}, {1, 1}, {0, 0}, {0, 0}});
    LabelVector y;
    y.values = {1, 0, 1, 0};
    const auto profiles = estimate_profiles(pm, y);
    CHECK(profiles[0].alpha_hat == profiles[1].alpha_hat);
    CHECK(profiles[0].beta_hat == profiles[1].beta_hat);
    CHECK(profiles[0].delta_hat == profiles[1].delta_hat);
  }
  SUBCASE("p_hat decomposes exactly on finite data") {
    Rng rng(61);
    const PassMatrix pm = aces::testing::random_matrix(rng, 12, 6);
    LabelVector y;
    y.values = {1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1};
    const double pi = y.pi();
    for (const TestProfile& p : estimate_profiles(pm, y)) {
      CHECK(p.p_hat ==
            doctest::Approx(pi * p.alpha_hat + (1.0 - pi) * p.beta_hat).epsilon(1e-12));
      CHECK(p.delta_hat >= -1.0);
      CHECK(p.delta_hat <= 1.0);
    }
  }
  SUBCASE("single-class labels rejected") {
    const PassMatrix pm = make_matrix({{1, 0}, {0, 1}});
    LabelVector y;
    y.values = {1, 1};
    CHECK_THROWS_AS(estimate_profiles(pm, y), ValidationError);
  }
}

TEST_CASE("snr and oracle weights") {
  SUBCASE("uniform weights, equal deltas: R = m * delta^2") {
    const std::vector<double> deltas(100, 0.3);
    const Snr s = snr(WeightVector::uniform(100), deltas);
    CHECK(s.ratio == doctest::Approx(9.0).epsilon(1e-12));
  }
  SUBCASE("oracle on (0.5, -0.5) uses only the positive test") {
    const std::vector<double> deltas = {0.5, -0.5};
    const WeightVector w = oracle_weights(deltas);
    CHECK(w.values == std::vector<double>{0.5, 0.0});
    const Snr s = snr(w, deltas);
    CHECK(s.mean_signal == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(s.ratio == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("oracle requires a positive delta") {
    CHECK_THROWS_WITH_AS(oracle_weights({-0.5, 0.0}), doctest::Contains("oracle undefined"),
                         ValidationError);
  }
  SUBCASE("all-equal positive deltas: oracle is uniform up to scale") {
    const std::vector<double> deltas(6, 0.4);
    const WeightVector w = oracle_weights(deltas);
    for (double v : w.values) CHECK(v == doctest::Approx(0.4).epsilon(1e-15));
  }
  SUBCASE("zero weights rejected") {
    WeightVector w;
    w.values = {0.0, 0.0};
    CHECK_THROWS_AS(snr(w, {0.1, 0.2}), ValidationError);
  }
}

TEST_CASE("passk_lower_bound") {
  const std::vector<double> deltas(100, 0.3);
  const WeightVector unif = WeightVector::uniform(100);
  SUBCASE("R = 9, n- = 100: k = 1 clamps to zero, k = 5 is informative") {
    // 1 - 100 e^{-4.5} < 0, clamped.
    CHECK(passk_lower_bound(unif, deltas, 100, 1) == 0.0);
    const double expected = 1.0 - 20.0 * std::exp(-4.5);
    CHECK(passk_lower_bound(unif, deltas, 100, 5) == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("large R with k >= n- approaches 1") {
    const std::vector<double> strong(200, 0.8);
    const double b = passk_lower_bound(WeightVector::uniform(200), strong, 5, 5);
    CHECK(b > 0.99);
  }
  SUBCASE("non-positive mean signal rejected") {
    CHECK_THROWS_WITH_AS(passk_lower_bound(unif, std::vector<double>(100, -0.1), 10, 1),
                         doctest::Contains("positive mean signal"), ValidationError);
  }
}

TEST_CASE("assumption threshold") {
  CHECK(assumption_threshold(500) == doctest::Approx(0.07447).epsilon(2e-4));
  CHECK(assumption_threshold(10) == doctest::Approx(0.5266).epsilon(1e-3));
  CHECK(!assumption_check(0.16, 10));  // the easy fixture is a toy below threshold
  // Exactly at the boundary the strict inequality fails.
  const double thr = assumption_threshold(25);
  CHECK(!assumption_check(thr, 25));
  CHECK(assumption_check(thr + 1e-12, 25));
}

TEST_CASE("coefficient_c") {
  CHECK(coefficient_c(0.3, 0.6, 0.5) == 0.0);
  CHECK(coefficient_c(0.5, 0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(coefficient_c(0.5, 0.9, 0.9) == doctest::Approx(0.25 / 0.09 * 0.4).epsilon(1e-12));
  CHECK_THROWS_AS(coefficient_c(0.0, 0.5, 0.7), ValidationError);
  CHECK_THROWS_AS(coefficient_c(0.5, 1.0, 0.7), ValidationError);
}

TEST_CASE("vote_statistics") {
  SUBCASE("perfect tests vote informative every time") {
    GenerativeConfig cfg;
    cfg.n = 30;
    cfg.pi = 0.5;
    cfg.alpha = {1.0, 1.0};
    cfg.beta = {0.0, 0.0};
    cfg.seed = 5;
    const SampledInstance inst = sample_matrix(cfg);
    const VoteStats stats = vote_statistics(inst.matrix, inst.labels);
    CHECK(stats.informative_fraction() == 1.0);
    CHECK(stats.misleading == 0);
  }
  SUBCASE("fractions sum to one and the mean vote equals delta-hat") {
    const LoadedMatrix easy = load_fixture("easy_8x10.json");
    const VoteStats stats = vote_statistics(easy.matrix, *easy.labels);
    CHECK(stats.informative_fraction() + stats.uninformative_fraction() +
              stats.misleading_fraction() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(stats.total() == 3 * 5 * 10);

    // Mean pairwise vote per test equals the empirical discriminative power.
    const auto profiles = estimate_profiles(easy.matrix, *easy.labels);
    for (std::size_t j = 0; j < easy.matrix.m; ++j) {
      PassMatrix single;
      single.n = easy.matrix.n;
      single.m = 1;
      single.candidate_ids = easy.matrix.candidate_ids;
      single.test_ids = {easy.matrix.test_ids[j]};
      for (std::size_t i = 0; i < easy.matrix.n; ++i)
        single.entries.push_back(easy.matrix.at(i, j));
      const VoteStats per_test = vote_statistics(single, *easy.labels);
      const double mean_vote =
          (static_cast<double>(per_test.informative) - static_cast<double>(per_test.misleading)) /
          static_cast<double>(per_test.total());
      CHECK(mean_vote == doctest::Approx(profiles[j].delta_hat).epsilon(1e-12));
    }
  }
  SUBCASE("the hard fixture has strictly more misleading votes than the easy one") {
    const LoadedMatrix easy = load_fixture("easy_8x10.json");
    const LoadedMatrix hard = load_fixture("hard_8x10.json");
    const VoteStats e = vote_statistics(easy.matrix, *easy.labels);
    const VoteStats h = vote_statistics(hard.matrix, *hard.labels);
    CHECK(h.misleading_fraction() > e.misleading_fraction());
  }
}

TEST_CASE("verify_loo_identity: smoke checks") {
  SUBCASE("uninformative tests have both sides near zero") {
    GenerativeConfig cfg;
    cfg.n = 60;
    cfg.pi = 0.5;
    cfg.alpha = {0.6, 0.4, 0.5};
    cfg.beta = {0.6, 0.4, 0.5};  // delta = 0 everywhere
    cfg.seed = 17;
    const IdentityReport report = verify_loo_identity(cfg, WeightVector::uniform(3), 2000);
    for (const IdentityTestReport& r : report.tests) {
      CHECK(r.within_3_sigma);
      CHECK(std::abs(r.rhs) < 1e-12);  // delta = 0 kills the right-hand side
    }
  }
  SUBCASE("a strongly misleading test has a negative left-hand side") {
    GenerativeConfig cfg;
    cfg.n = 80;
    cfg.pi = 0.4;
    cfg.alpha = {0.9, 0.9, 0.9, 0.1};
    cfg.beta = {0.2, 0.2, 0.2, 0.9};  // last test: delta = -0.8
    cfg.seed = 19;
    const IdentityReport report = verify_loo_identity(cfg, WeightVector::uniform(4), 2000);
    CHECK(report.tests[3].lhs_excess < 0.0);
    CHECK(report.tests[3].sign_matches);
  }
  SUBCASE("degenerate pi rejected") {
    GenerativeConfig cfg;
    cfg.n = 10;
    cfg.pi = 1.0;
    cfg.alpha = {0.9};
    cfg.beta = {0.1};
    CHECK_THROWS_AS(verify_loo_identity(cfg, WeightVector::uniform(1), 2000), ValidationError);
  }
}

TEST_CASE("sign_recovery_report: perfect tests are always recovered") {
  GenerativeConfig cfg;
  cfg.n = 40;
  cfg.pi = 0.4;
  cfg.alpha = {1.0, 1.0, 1.0, 1.0};
  cfg.beta = {0.0, 0.0, 0.0, 0.0};
  cfg.seed = 23;
  const SignRecoveryReport report = sign_recovery_report(cfg, 50);
  CHECK(report.fn == 0);
  CHECK(report.fp == 0);
  CHECK(report.informative_recall_strong() == 1.0);
}
