// Command-line front end: rerank, evaluate, simulate, verify, analyze.
// Data goes to stdout or --out; diagnostics go to stderr.

#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aces/commands.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
  const char* v = std::getenv("ACES_SEED");
  if (!v) return std::nullopt;
  try {
    return std::stoull(v);
  } catch (...) {
    return std::nullopt;
  }
}

std::optional<aces::FileFormat> parse_format(const std::string& fmt) {
  if (fmt.empty()) return std::nullopt;
  if (fmt == "json") return aces::FileFormat::json;
  if (fmt == "csv") return aces::FileFormat::csv;
  throw CLI::ValidationError("--format", "must be json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reranks code candidates scored against machine-generated tests,\n"
               "weighting each test by its leave-one-out consistency with the\n"
               "rest of the pass matrix."};
  app.require_subcommand(1);

  // rerank ----------------------------------------------------------------
  aces::RerankOptions rerank;
  std::string rerank_labels, rerank_out, rerank_trace, rerank_format;
  std::uint64_t rerank_seed = 0;
  auto* cmd_rr = app.add_subcommand("rerank", "Rank candidates from a pass matrix");
  cmd_rr->add_option("--matrix", rerank.matrix_path, "pass matrix file")->required();
  cmd_rr->add_option("--labels", rerank_labels, "labels sidecar (one 0/1 per line)");
  cmd_rr->add_option("--method", rerank.method, "mv | aces-c | aces-c-filter | aces-o")
      ->default_val("mv");
  cmd_rr->add_option("--k", rerank.k_list, "pass@k cutoffs (needs labels)");
  cmd_rr->add_option("--gamma", rerank.optimizer.gamma, "surrogate sharpness")->default_val(10.0);
  cmd_rr->add_option("--eta", rerank.optimizer.eta, "learning rate")->default_val(0.05);
  cmd_rr->add_option("--steps", rerank.optimizer.steps, "optimizer iterations")->default_val(300);
  cmd_rr->add_option("--prefilter-k", rerank.optimizer.prefilter_k,
                     "optimize on the top-K candidates only (0 = off)");
  cmd_rr->add_option("--seed", rerank_seed, "seed recorded in manifests");
  cmd_rr->add_option("--out", rerank_out, "report path (default stdout)");
  cmd_rr->add_option("--trace-out", rerank_trace, "aces-o trace CSV path");
  cmd_rr->add_option("--passk-curve", rerank.passk_curve, "also report pass@k for k=1..N");
  cmd_rr->add_option("--format", rerank_format, "input format: json | csv");
  std::string rerank_external;
  cmd_rr->add_option("--external", rerank_external,
                     "blend with a quality/consensus file (see README)");
  cmd_rr->add_option("--alpha", rerank.external_alpha, "consensus blend: 1 = scores only")
      ->default_val(1.0);
  cmd_rr->add_option("--beta", rerank.external_beta, "signal blend: 1 = pass-matrix scores only")
      ->default_val(1.0);

  // evaluate ---------------------------------------------------------------
  aces::EvaluateOptions evaluate;
  std::string eval_out;
  auto* cmd_ev = app.add_subcommand("evaluate", "Pass@k from scores and labels");
  cmd_ev->add_option("--scores", evaluate.scores_path, "report or scores file")->required();
  cmd_ev->add_option("--labels", evaluate.labels_path, "labels sidecar")->required();
  cmd_ev->add_option("--k", evaluate.k_list, "pass@k cutoffs")->required();
  cmd_ev->add_option("--estimator", evaluate.estimator, "rerank | unbiased")
      ->default_val("rerank");
  cmd_ev->add_option("--out", eval_out, "output path (default stdout)");

  // simulate ---------------------------------------------------------------
  aces::SimulateOptions simulate;
  std::uint64_t sim_seed = 0;
  bool sim_seed_set = false;
  auto* cmd_sim = app.add_subcommand("simulate", "Sample matrices from a generative config");
  cmd_sim->add_option("--config", simulate.config_path, "generative config json")->required();
  cmd_sim->add_option("--trials", simulate.trials, "number of instances")->default_val(1);
  cmd_sim->add_option("--out", simulate.out_dir, "output directory")->required();
  cmd_sim->add_option("--seed", sim_seed, "override config seed")
      ->each([&](const std::string&) { sim_seed_set = true; });

  // verify -----------------------------------------------------------------
  aces::VerifyOptions verify;
  std::string verify_out;
  std::uint64_t verify_seed = 0;
  bool verify_seed_set = false;
  std::size_t verify_trials = 0;
  bool verify_trials_set = false;
  auto* cmd_vf = app.add_subcommand("verify", "Monte-Carlo checks of the ranking theory");
  cmd_vf->add_option("--suite", verify.suite, "identity | bound | oracle | sign-recovery")
      ->required();
  cmd_vf->add_option("--config", verify.config_path, "suite config json")->required();
  cmd_vf->add_option("--trials", verify_trials, "override trial count")
      ->each([&](const std::string&) { verify_trials_set = true; });
  cmd_vf->add_option("--seed", verify_seed, "override seed")
      ->each([&](const std::string&) { verify_seed_set = true; });
  cmd_vf->add_option("--out", verify_out, "report path (default stdout)");

  // analyze ----------------------------------------------------------------
  aces::AnalyzeOptions analyze;
  std::string an_labels, an_out, an_format;
  auto* cmd_an = app.add_subcommand("analyze", "Test-quality profile of a labeled matrix");
  cmd_an->add_option("--matrix", analyze.matrix_path, "pass matrix file")->required();
  cmd_an->add_option("--labels", an_labels, "labels sidecar");
  cmd_an->add_option("--out", an_out, "output path (default stdout)");
  cmd_an->add_option("--format", an_format, "input format: json | csv");

  CLI11_PARSE(app, argc, argv);

  if (cmd_rr->parsed()) {
    if (!rerank_labels.empty()) rerank.labels_path = rerank_labels;
    if (!rerank_out.empty()) rerank.out_path = rerank_out;
    if (!rerank_trace.empty()) rerank.trace_out = rerank_trace;
    if (!rerank_external.empty()) rerank.external_path = rerank_external;
    rerank.format = parse_format(rerank_format);
    rerank.optimizer.seed = cmd_rr->count("--seed") ? rerank_seed : env_seed().value_or(0);
    return aces::cmd_rerank(rerank);
  }
  if (cmd_ev->parsed()) {
    if (!eval_out.empty()) evaluate.out_path = eval_out;
    return aces::cmd_evaluate(evaluate);
  }
  if (cmd_sim->parsed()) {
    if (sim_seed_set)
      simulate.seed_override = sim_seed;
    else if (auto s = env_seed())
      simulate.seed_override = *s;
    return aces::cmd_simulate(simulate);
  }
  if (cmd_vf->parsed()) {
    if (verify_trials_set) verify.trials_override = verify_trials;
    if (verify_seed_set)
      verify.seed_override = verify_seed;
    else if (auto s = env_seed())
      verify.seed_override = *s;
    if (!verify_out.empty()) verify.out_path = verify_out;
    return aces::cmd_verify(verify);
  }
  if (cmd_an->parsed()) {
    if (!an_labels.empty()) analyze.labels_path = an_labels;
    if (!an_out.empty()) analyze.out_path = an_out;
    analyze.format = parse_format(an_format);
    return aces::cmd_analyze(analyze);
  }
  return aces::kExitValidation;
}
