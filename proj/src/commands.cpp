#include "aces/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aces/aces_c.hpp"
#include "aces/aces_o.hpp"
#include "aces/ranking.hpp"
#include "aces/report.hpp"
#include "aces/rng.hpp"
#include "aces/theory_lab.hpp"

namespace aces {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void log_error(const std::string& msg) { std::cerr << "error: " << msg << '\n'; }
void log_info(const std::string& msg) { std::cerr << msg << '\n'; }

void write_text(const std::optional<std::string>& out_path, const std::string& text) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + *out_path);
  out << text;
  if (!out) throw IoError("write failed: " + *out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Sorted, deduplicated k list so pass@k is reported once per k and is
// non-decreasing down the report.
std::vector<std::size_t> canonical_k_list(std::vector<std::size_t> ks, std::size_t n) {
  std::set<std::size_t> uniq(ks.begin(), ks.end());
  std::vector<std::size_t> out;
  for (std::size_t k : uniq) {
    if (k < 1 || k > n) throw ValidationError("k out of range: " + std::to_string(k));
    out.push_back(k);
  }
  return out;
}

GenerativeConfig parse_generative_config(const json& doc) {
  GenerativeConfig cfg;
  cfg.n = doc.at("n").get<std::size_t>();
  cfg.pi = doc.at("pi").get<double>();
  cfg.alpha = doc.at("alpha").get<std::vector<double>>();
  cfg.beta = doc.at("beta").get<std::vector<double>>();
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("label_mode")) {
    const std::string mode = doc.at("label_mode").get<std::string>();
    if (mode == "bernoulli")
      cfg.label_mode = LabelMode::bernoulli;
    else if (mode == "exact_count")
      cfg.label_mode = LabelMode::exact_count;
    else
      throw ValidationError("unknown label_mode: " + mode);
  }
  cfg.validate();
  return cfg;
}

ordered_json generative_config_json(const GenerativeConfig& cfg) {
  ordered_json out;
  out["n"] = cfg.n;
  out["pi"] = cfg.pi;
  out["alpha"] = cfg.alpha;
  out["beta"] = cfg.beta;
  out["seed"] = cfg.seed;
  out["label_mode"] = cfg.label_mode == LabelMode::bernoulli ? "bernoulli" : "exact_count";
  return out;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    log_error(e.what());
    return kExitIo;
  } catch (const ValidationError& e) {
    log_error(e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    log_error(e.what());
    return kExitValidation;
  }
}

struct PreparedInput {
  PassMatrix matrix;
  std::optional<LabelVector> labels;
  std::vector<std::string> removed_tests;
  std::vector<std::string> warnings;
};

PreparedInput load_and_preprocess(const std::string& matrix_path,
                                  const std::optional<std::string>& labels_path,
                                  std::optional<FileFormat> format) {
  LoadedMatrix loaded = load_pass_matrix_file(matrix_path, format);
  PreparedInput prep;
  prep.labels = loaded.labels;
  if (labels_path) {
    LabelVector side = load_labels_file(*labels_path);
    if (side.values.size() != loaded.matrix.n)
      throw ValidationError("labels file length does not match matrix rows");
    prep.labels = std::move(side);
  }
  ConstantColumnResult cleaned = remove_constant_columns(loaded.matrix);
  prep.matrix = std::move(cleaned.matrix);
  prep.removed_tests = std::move(cleaned.removed_test_ids);
  if (!prep.removed_tests.empty())
    prep.warnings.push_back("removed " + std::to_string(prep.removed_tests.size()) +
                            " constant test column(s)");
  return prep;
}

}  // namespace

int cmd_rerank(const RerankOptions& options) {
  return run_guarded([&]() -> int {
    PreparedInput prep = load_and_preprocess(options.matrix_path, options.labels_path,
                                             options.format);
    const PassMatrix& B = prep.matrix;

    RerankReport report;
    report.method = options.method;
    report.n = B.n;
    report.m = B.m;
    report.candidate_ids = B.candidate_ids;
    report.test_ids = B.test_ids;
    report.warnings = prep.warnings;
    report.removed_tests = prep.removed_tests;
    for (std::size_t j = 0; j < B.m; ++j)
      report.pass_rates.push_back(static_cast<double>(B.col_sum(j)) /
                                  static_cast<double>(B.n));

    std::string trace_csv;
    if (options.method == "mv") {
      report.weights_raw = WeightVector::uniform(B.m);
      report.weights_normalized = report.weights_raw;
      report.loo = loo_auc_all(B, report.weights_raw);
      report.scores = weighted_scores(B, report.weights_raw);
      report.ranking = rank(report.scores);
    } else if (options.method == "aces-c") {
      AcesCResult res = aces_c(B);
      if (res.uninformative)
        report.warnings.push_back("uninformative: all weights zero, fell back to majority vote");
      report.loo = std::move(res.loo);
      report.weights_raw = std::move(res.weights_raw);
      report.weights_normalized = std::move(res.weights_normalized);
      report.scores = std::move(res.scores);
      report.ranking = std::move(res.ranking);
    } else if (options.method == "aces-c-filter") {
      AcesCFilterResult res = aces_c_filter(B);
      if (res.uninformative)
        report.warnings.push_back("uninformative: no test retained, fell back to majority vote");
      report.loo = std::move(res.loo);
      report.weights_raw = res.weights;
      report.weights_normalized = std::move(res.weights);
      report.scores = std::move(res.scores);
      report.ranking = std::move(res.ranking);
    } else if (options.method == "aces-o") {
      AcesOResult res = aces_o(B, options.optimizer, prep.labels);
      for (std::size_t j = 0; j < B.m; ++j)
        if (res.masked[j])
          report.warnings.push_back("test " + B.test_ids[j] +
                                    " constant on the optimization pool; weight not informed");
      report.loo = loo_auc_all(B, res.weights);
      report.weights_raw = res.weights;
      report.weights_normalized = std::move(res.weights);
      report.scores = std::move(res.scores);
      report.ranking = std::move(res.ranking);
      if (options.trace_out) {
        std::ostringstream csv;
        csv << "iteration,objective,auc\n";
        for (std::size_t t = 0; t < res.trace.size(); ++t) {
          csv << t << ',' << res.trace[t].objective << ',';
          if (res.trace[t].auc_vs_labels) csv << *res.trace[t].auc_vs_labels;
          csv << '\n';
        }
        trace_csv = csv.str();
      }
    } else {
      throw ValidationError("unknown method: " + options.method);
    }

    if (options.external_path) {
      json ext;
      try {
        ext = json::parse(read_file(*options.external_path));
      } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed external scores file: ") + e.what());
      }
      const auto quality = ext.at("quality").get<std::vector<double>>();
      const auto consensus = ext.at("consensus").get<std::vector<std::vector<double>>>();
      // Scores enter the blend normalized into [0,1].
      std::vector<double> unit_scores = report.scores.values;
      const double total = report.weights_normalized.sum();
      for (double& s : unit_scores) s /= total;
      report.scores.values = combine_external(unit_scores, quality, consensus,
                                              options.external_alpha, options.external_beta);
      report.ranking = rank(report.scores);
      report.warnings.push_back("scores blended with external quality/consensus signals");
    }

    if (prep.labels) {
      const std::size_t pos = prep.labels->n_pos();
      if (pos > 0 && pos < prep.labels->values.size())
        report.auc_vs_labels = auc(report.scores.values, prep.labels->values);
      else
        report.warnings.push_back("labels are single-class; AUC undefined");

      std::vector<std::size_t> ks = canonical_k_list(options.k_list, B.n);
      if (options.passk_curve > 0)
        for (std::size_t k = 1; k <= std::min(options.passk_curve, B.n); ++k) ks.push_back(k);
      ks = canonical_k_list(ks, B.n);
      for (std::size_t k : ks)
        report.pass_at_k.push_back({k, pass_at_k_rerank(report.ranking, *prep.labels, k)});
    } else if (!options.k_list.empty()) {
      throw ValidationError("pass@k requested but no labels supplied");
    }

    write_text(options.out_path, report.to_json().dump(2) + "\n");
    if (options.trace_out) write_text(options.trace_out, trace_csv);
    return kExitOk;
  });
}

int cmd_evaluate(const EvaluateOptions& options) {
  return run_guarded([&]() -> int {
    json doc;
    try {
      doc = json::parse(read_file(options.scores_path));
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed scores file: ") + e.what());
    }
    std::vector<double> scores;
    if (doc.is_object() && doc.contains("scores"))
      scores = doc.at("scores").get<std::vector<double>>();
    else if (doc.is_array())
      scores = doc.get<std::vector<double>>();
    else
      throw ValidationError("scores file must be an array or an object with a scores field");

    LabelVector labels = load_labels_file(options.labels_path);
    if (labels.values.size() != scores.size())
      throw ValidationError("labels and scores differ in length");

    const std::size_t n = scores.size();
    std::vector<std::size_t> ks = canonical_k_list(options.k_list, n);
    if (ks.empty()) throw ValidationError("at least one k is required");

    ordered_json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "evaluate";
    out["estimator"] = options.estimator;
    out["n"] = n;
    out["correct"] = labels.n_pos();
    auto pk = ordered_json::array();
    if (options.estimator == "rerank") {
      ScoreVector sv;
      sv.values = scores;
      const Ranking ranking = rank(sv);
      for (std::size_t k : ks)
        pk.push_back({{"k", k}, {"value", pass_at_k_rerank(ranking, labels, k)}});
    } else if (options.estimator == "unbiased") {
      for (std::size_t k : ks)
        pk.push_back({{"k", k}, {"value", pass_at_k_unbiased(n, labels.n_pos(), k)}});
    } else {
      throw ValidationError("unknown estimator: " + options.estimator);
    }
    out["pass_at_k"] = std::move(pk);
    write_text(options.out_path, out.dump(2) + "\n");
    return kExitOk;
  });
}

int cmd_simulate(const SimulateOptions& options) {
  return run_guarded([&]() -> int {
    const std::string config_text = read_file(options.config_path);
    json doc;
    try {
      doc = json::parse(config_text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed config: ") + e.what());
    }
    GenerativeConfig cfg = parse_generative_config(doc);
    if (options.seed_override) cfg.seed = *options.seed_override;
    if (options.trials < 1) throw ValidationError("trials must be at least 1");

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + options.out_dir);

    ordered_json manifest;
    manifest["schema_version"] = kReportSchemaVersion;
    manifest["command"] = "simulate";
    manifest["seed"] = cfg.seed;
    manifest["trials"] = options.trials;
    manifest["config"] = generative_config_json(cfg);
    manifest["config_hash"] = hex64(fnv1a64(generative_config_json(cfg).dump()));

    auto files = ordered_json::array();
    for (std::size_t t = 0; t < options.trials; ++t) {
      GenerativeConfig trial_cfg = cfg;
      trial_cfg.seed = Rng::derive(cfg.seed, t).next();
      const SampledInstance inst = sample_matrix(trial_cfg);
      const std::string name = "trial_" + std::to_string(t) + ".json";
      save_pass_matrix_file(inst.matrix, inst.labels,
                            (std::filesystem::path(options.out_dir) / name).string(),
                            FileFormat::json);
      files.push_back(name);
    }
    manifest["files"] = std::move(files);

    std::ofstream mf(std::filesystem::path(options.out_dir) / "manifest.json",
                     std::ios::binary);
    if (!mf) throw IoError("cannot write manifest");
    mf << manifest.dump(2) << '\n';
    log_info("wrote " + std::to_string(options.trials) + " instance(s) to " + options.out_dir);
    return kExitOk;
  });
}

namespace {

int verify_identity(const json& doc, std::size_t trials, std::uint64_t seed,
                    const std::optional<std::string>& out_path) {
  GenerativeConfig cfg = parse_generative_config(doc.at("generative"));
  cfg.seed = seed;
  WeightVector w = doc.contains("weights")
                       ? WeightVector{doc.at("weights").get<std::vector<double>>()}
                       : WeightVector::uniform(cfg.m());
  const IdentityReport report = verify_loo_identity(cfg, w, trials);

  ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = "verify";
  out["suite"] = "identity";
  out["trials"] = report.trials;
  auto tests = ordered_json::array();
  for (const IdentityTestReport& r : report.tests) {
    tests.push_back({{"delta", r.delta},
                     {"lhs_excess", r.lhs_excess},
                     {"lhs_se", r.lhs_se},
                     {"a_minus_j", r.a_minus_j},
                     {"rhs", r.rhs},
                     {"gap", r.gap},
                     {"combined_se", r.combined_se},
                     {"within_3_sigma", r.within_3_sigma},
                     {"sign_matches", r.sign_matches},
                     {"defined_trials", r.defined_trials}});
  }
  out["tests"] = std::move(tests);
  const double frac =
      static_cast<double>(report.within_count) / static_cast<double>(report.tests.size());
  const bool pass = frac >= 0.95 && report.signs_ok;
  out["within_fraction"] = frac;
  out["signs_ok"] = report.signs_ok;
  out["pass"] = pass;
  write_text(out_path, out.dump(2) + "\n");
  if (!pass) {
    log_error("identity suite failed: within_fraction=" + std::to_string(frac) +
              " signs_ok=" + std::to_string(report.signs_ok));
    return kExitTolerance;
  }
  return kExitOk;
}

int verify_bound(const json& doc, std::size_t trials, std::uint64_t seed,
                 const std::optional<std::string>& out_path) {
  GenerativeConfig cfg = parse_generative_config(doc.at("generative"));
  cfg.seed = seed;
  std::vector<std::size_t> ks = doc.contains("k")
                                    ? doc.at("k").get<std::vector<std::size_t>>()
                                    : std::vector<std::size_t>{1, 5};
  const WeightVector unif = WeightVector::uniform(cfg.m());
  std::vector<double> deltas;
  for (std::size_t j = 0; j < cfg.m(); ++j) deltas.push_back(cfg.delta(j));

  ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = "verify";
  out["suite"] = "bound";
  out["trials"] = trials;

  const Snr s = snr(unif, deltas);
  if (!(s.mean_signal > 0.0)) {
    // Precondition of the bound, not a tolerance failure.
    out["skipped"] = true;
    out["reason"] = "bound inapplicable: mean signal M(w_unif) <= 0";
    write_text(out_path, out.dump(2) + "\n");
    log_info("bound suite skipped: M(w_unif) <= 0");
    return kExitOk;
  }

  auto results = ordered_json::array();
  bool pass = true;
  for (std::size_t k : ks) {
    double sum = 0.0, sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      GenerativeConfig trial_cfg = cfg;
      trial_cfg.seed = Rng::derive(cfg.seed, t).next();
      const SampledInstance inst = sample_matrix(trial_cfg);
      const Ranking ranking = rank(weighted_scores(inst.matrix, unif));
      const double p = pass_at_k_rerank(ranking, inst.labels, k);
      sum += p;
      sq += p * p;
    }
    const double nt = static_cast<double>(trials);
    const double mean = sum / nt;
    const double se = std::sqrt(std::max(0.0, sq / nt - mean * mean) / nt);
    const double bound =
        passk_lower_bound_real(unif, deltas, (1.0 - cfg.pi) * static_cast<double>(cfg.n), k);
    const bool ok = mean >= bound - 3.0 * se;
    pass &= ok;
    results.push_back({{"k", k},
                       {"empirical", mean},
                       {"se", se},
                       {"bound", bound},
                       {"pass", ok}});
  }
  out["results"] = std::move(results);
  out["pass"] = pass;
  write_text(out_path, out.dump(2) + "\n");
  if (!pass) {
    log_error("bound suite failed");
    return kExitTolerance;
  }
  return kExitOk;
}

int verify_oracle(const json& doc, std::size_t trials, std::uint64_t seed,
                  const std::optional<std::string>& out_path) {
  std::vector<double> deltas;
  if (doc.contains("deltas")) {
    deltas = doc.at("deltas").get<std::vector<double>>();
  } else {
    GenerativeConfig cfg = parse_generative_config(doc.at("generative"));
    for (std::size_t j = 0; j < cfg.m(); ++j) deltas.push_back(cfg.delta(j));
  }
  const WeightVector oracle = oracle_weights(deltas);
  const Snr best = snr(oracle, deltas);

  Rng rng(seed);
  bool dominated = true;
  double worst_margin = best.ratio;
  for (std::size_t t = 0; t < trials; ++t) {
    WeightVector w;
    w.values.resize(deltas.size());
    double total = 0.0;
    for (double& v : w.values) {
      v = rng.uniform();
      total += v;
    }
    if (total == 0.0) continue;
    const Snr s = snr(w, deltas);
    if (s.mean_signal <= 0.0) continue;  // R is only meaningful where the bound applies
    dominated &= best.ratio >= s.ratio - 1e-12;
    worst_margin = std::min(worst_margin, best.ratio - s.ratio);
  }

  double delta_bar = 0.0;
  for (double d : deltas) delta_bar += d;
  delta_bar /= static_cast<double>(deltas.size());
  const double mv_ratio = static_cast<double>(deltas.size()) * delta_bar * delta_bar;
  const bool beats_mv = delta_bar <= 0.0 || best.ratio >= mv_ratio - 1e-12;

  ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = "verify";
  out["suite"] = "oracle";
  out["oracle_snr"] = best.ratio;
  out["oracle_mean_signal"] = best.mean_signal;
  out["random_draws"] = trials;
  out["dominates_random"] = dominated;
  out["worst_margin"] = worst_margin;
  out["mv_snr"] = mv_ratio;
  out["dominates_mv"] = beats_mv;
  const bool pass = dominated && beats_mv;
  out["pass"] = pass;
  write_text(out_path, out.dump(2) + "\n");
  if (!pass) {
    log_error("oracle suite failed");
    return kExitTolerance;
  }
  return kExitOk;
}

int verify_sign_recovery(const json& doc, std::size_t trials, std::uint64_t seed,
                         const std::optional<std::string>& out_path) {
  GenerativeConfig cfg = parse_generative_config(doc.at("generative"));
  cfg.seed = seed;
  const double min_recall = doc.contains("min_recall") ? doc.at("min_recall").get<double>() : 0.94;
  const SignRecoveryReport report = sign_recovery_report(cfg, trials);

  ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = "verify";
  out["suite"] = "sign-recovery";
  out["trials"] = trials;
  out["tp"] = report.tp;
  out["fp"] = report.fp;
  out["fn"] = report.fn;
  out["tn"] = report.tn;
  out["informative_recall_strong"] = report.informative_recall_strong();
  out["error_rate_strong"] = report.error_rate_strong();
  out["error_rate_weak"] = report.error_rate_weak();
  const bool pass = report.informative_recall_strong() >= min_recall;
  out["pass"] = pass;
  write_text(out_path, out.dump(2) + "\n");
  if (!pass) {
    log_error("sign-recovery suite failed: recall " +
              std::to_string(report.informative_recall_strong()));
    return kExitTolerance;
  }
  return kExitOk;
}

}  // namespace

int cmd_verify(const VerifyOptions& options) {
  return run_guarded([&]() -> int {
    json doc;
    try {
      doc = json::parse(read_file(options.config_path));
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed config: ") + e.what());
    }
    std::size_t trials = doc.contains("trials") ? doc.at("trials").get<std::size_t>() : 2000;
    if (options.trials_override) trials = *options.trials_override;
    std::uint64_t seed = doc.contains("seed") ? doc.at("seed").get<std::uint64_t>() : 0;
    if (doc.contains("generative") && doc.at("generative").contains("seed") &&
        !doc.contains("seed"))
      seed = doc.at("generative").at("seed").get<std::uint64_t>();
    if (options.seed_override) seed = *options.seed_override;

    if (options.suite == "identity") return verify_identity(doc, trials, seed, options.out_path);
    if (options.suite == "bound") return verify_bound(doc, trials, seed, options.out_path);
    if (options.suite == "oracle") return verify_oracle(doc, trials, seed, options.out_path);
    if (options.suite == "sign-recovery")
      return verify_sign_recovery(doc, trials, seed, options.out_path);
    throw ValidationError("unknown suite: " + options.suite);
  });
}

int cmd_analyze(const AnalyzeOptions& options) {
  return run_guarded([&]() -> int {
    PreparedInput prep = load_and_preprocess(options.matrix_path, options.labels_path,
                                             options.format);
    if (!prep.labels) throw ValidationError("analyze requires labels");
    const PassMatrix& B = prep.matrix;
    const LabelVector& y = *prep.labels;

    const std::vector<TestProfile> profiles = estimate_profiles(B, y);
    double delta_bar = 0.0;
    std::vector<double> deltas;
    std::size_t informative = 0, misleading = 0;
    for (const TestProfile& p : profiles) {
      deltas.push_back(p.delta_hat);
      delta_bar += p.delta_hat;
      if (p.delta_hat > 0.0) ++informative;
      if (p.delta_hat < 0.0) ++misleading;
    }
    delta_bar /= static_cast<double>(profiles.size());

    const VoteStats votes = vote_statistics(B, y);

    ordered_json out;
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "analyze";
    out["n"] = B.n;
    out["m"] = B.m;
    out["removed_tests"] = prep.removed_tests;
    auto prof = ordered_json::array();
    for (std::size_t j = 0; j < profiles.size(); ++j) {
      prof.push_back({{"test", B.test_ids[j]},
                      {"alpha", profiles[j].alpha_hat},
                      {"beta", profiles[j].beta_hat},
                      {"delta", profiles[j].delta_hat},
                      {"pass_rate", profiles[j].p_hat}});
    }
    out["profiles"] = std::move(prof);
    out["delta_bar"] = delta_bar;
    out["informative_tests"] = informative;
    out["misleading_tests"] = misleading;
    out["assumption"] = ordered_json{{"threshold", assumption_threshold(B.m)},
                                     {"satisfied", assumption_check(delta_bar, B.m)}};
    out["votes"] = ordered_json{{"informative", votes.informative},
                                {"uninformative", votes.uninformative},
                                {"misleading", votes.misleading},
                                {"informative_fraction", votes.informative_fraction()},
                                {"uninformative_fraction", votes.uninformative_fraction()},
                                {"misleading_fraction", votes.misleading_fraction()}};

    ordered_json snr_json;
    const WeightVector unif = WeightVector::uniform(B.m);
    const Snr s_unif = snr(unif, deltas);
    snr_json["uniform"] = ordered_json{{"mean_signal", s_unif.mean_signal},
                                       {"snr", s_unif.ratio}};
    const AcesCResult c = aces_c(B);
    if (!c.uninformative) {
      const Snr s_c = snr(c.weights_raw, deltas);
      snr_json["aces_c"] = ordered_json{{"mean_signal", s_c.mean_signal}, {"snr", s_c.ratio}};
    } else {
      snr_json["aces_c"] = nullptr;
    }
    bool any_pos = std::any_of(deltas.begin(), deltas.end(), [](double d) { return d > 0.0; });
    if (any_pos) {
      const Snr s_star = snr(oracle_weights(deltas), deltas);
      snr_json["oracle"] = ordered_json{{"mean_signal", s_star.mean_signal},
                                        {"snr", s_star.ratio}};
    } else {
      snr_json["oracle"] = nullptr;
    }
    out["snr"] = std::move(snr_json);

    write_text(options.out_path, out.dump(2) + "\n");
    return kExitOk;
  });
}

}  // namespace aces
