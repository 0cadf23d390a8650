// eosp: instance generation, solving, single runs, experiment sweeps and
// convergence-plot data for scheduling under an unknown constraint model.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eosp/experiment.hpp"
#include "eosp/generator.hpp"
#include "eosp/json_io.hpp"

namespace fs = std::filesystem;
using namespace eosp;

namespace {

LanguageConfig default_language(const Instance &inst) {
  LanguageConfig lang;
  lang.cap_center_k = default_cap_k(static_cast<int>(inst.size()));
  lang.cap_center_w = std::max(1, inst.horizon() / 5);
  return lang;
}

void emit(const json &j, const std::string &path) {
  if (path.empty() || path == "-")
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(path, j);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Earth-observation scheduling under unknown constraints"};
  app.require_subcommand(1);

  // gen
  GenConfig gen_cfg;
  std::string gen_out = ".";
  int gen_cap_k = -1;
  int gen_cap_w = -1;
  auto *gen = app.add_subcommand("gen", "Generate an instance, its hidden model and language");
  gen->add_option("--n", gen_cfg.n, "Number of tasks")->required();
  gen->add_option("--seed", gen_cfg.seed, "Generator seed");
  gen->add_option("--out-dir", gen_out, "Directory for instance.json, hidden.json, language.json");
  gen->add_option("--horizon-factor", gen_cfg.horizon_factor, "H = factor * n");
  gen->add_option("--window-len-lo", gen_cfg.window_len_lo);
  gen->add_option("--window-len-hi", gen_cfg.window_len_hi);
  gen->add_option("--sep-fraction", gen_cfg.sep_pair_fraction);
  gen->add_option("--cap-k", gen_cap_k, "Hidden capacity limit (default from n)");
  gen->add_option("--cap-w", gen_cap_w, "Hidden capacity window (default H/5)");

  // solve
  std::string solve_instance, solve_constraints, solve_out;
  double solve_limit = kDefaultSolveTimeLimit;
  std::uint64_t solve_seed = 0;
  bool solve_brute = false;
  auto *solve_cmd = app.add_subcommand("solve", "Maximize total priority under a constraint set");
  solve_cmd->add_option("--instance", solve_instance)->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--constraints", solve_constraints, "Constraint set JSON (default: none)")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--time-limit", solve_limit);
  solve_cmd->add_option("--seed", solve_seed);
  solve_cmd->add_flag("--brute-force", solve_brute, "Exhaustive enumeration instead of branch and bound");
  solve_cmd->add_option("--out", solve_out, "Output JSON (default stdout)");

  // run
  std::string run_method, run_instance, run_hidden, run_language, run_trace, run_summary_path;
  int run_q = 100, run_budget = 100;
  double run_t_iter = kDefaultSolveTimeLimit, run_t_final = kDefaultSolveTimeLimit, run_t_ref = 120.0;
  std::uint64_t run_seed = 0;
  bool run_fao_random = false;
  auto *run = app.add_subcommand("run", "Run one method against a hidden model");
  run->add_option("--method", run_method, "pg | fao | lo | ref")
      ->required()
      ->check(CLI::IsMember({"pg", "fao", "lo", "ref"}, CLI::ignore_case));
  run->add_option("--instance", run_instance)->required()->check(CLI::ExistingFile);
  run->add_option("--hidden", run_hidden, "Hidden model JSON, only read by the oracle")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--language", run_language, "Language JSON (default from instance size)")
      ->check(CLI::ExistingFile);
  run->add_option("--q-cutoff", run_q);
  run->add_option("--fao-budget", run_budget);
  run->add_option("--t-iter", run_t_iter);
  run->add_option("--t-final", run_t_final);
  run->add_option("--t-ref", run_t_ref);
  run->add_option("--seed", run_seed);
  run->add_flag("--fao-random-proposals", run_fao_random, "FAO proposes random L-feasible schedules");
  run->add_option("--trace-out", run_trace, "L&O per-iteration JSONL trace");
  run->add_option("--summary-out", run_summary_path, "Summary JSON (default stdout)");

  // experiment
  std::string exp_config, exp_out = "results";
  std::vector<int> exp_n;
  std::vector<std::uint64_t> exp_seeds;
  std::vector<std::string> exp_methods;
  int exp_q = -1, exp_budget = -1, exp_jobs = -1;
  double exp_t_iter = -1, exp_t_final = -1, exp_t_ref = -1;
  bool exp_full = false, exp_no_timing = false, exp_strict = false, exp_no_traces = false;
  auto *exp = app.add_subcommand("experiment", "Sweep methods over generated instances");
  exp->add_option("--config", exp_config, "Experiment config JSON")->check(CLI::ExistingFile);
  exp->add_option("--out-dir", exp_out, "Writes results.csv, summary.csv, traces/");
  exp->add_option("--n", exp_n, "Task counts");
  exp->add_option("--seeds", exp_seeds, "Seeds");
  exp->add_option("--methods", exp_methods, "Subset of pg fao lo ref");
  exp->add_option("--q-cutoff", exp_q);
  exp->add_option("--fao-budget", exp_budget);
  exp->add_option("--t-iter", exp_t_iter);
  exp->add_option("--t-final", exp_t_final);
  exp->add_option("--t-ref", exp_t_ref);
  exp->add_option("--jobs", exp_jobs, "Worker threads");
  exp->add_flag("--full-scale", exp_full, "n = 10..50, 20 s solves, 120 s reference");
  exp->add_flag("--no-timing", exp_no_timing, "Write wall_time as 0 for byte-stable output");
  exp->add_flag("--no-traces", exp_no_traces, "Skip traces/*.jsonl");
  exp->add_flag("--strict", exp_strict, "Exit nonzero if any row failed");

  // trace-plot-data
  std::string tp_trace, tp_out;
  auto *tp = app.add_subcommand("trace-plot-data", "Convert an L&O JSONL trace to plot CSV");
  tp->add_option("--trace", tp_trace)->required()->check(CLI::ExistingFile);
  tp->add_option("--out", tp_out, "Output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_cap_k >= 0)
        gen_cfg.cap_k = gen_cap_k;
      if (gen_cap_w >= 0)
        gen_cfg.cap_w = gen_cap_w;
      const GeneratedInstance g = generate(gen_cfg);
      fs::create_directories(gen_out);
      write_json_file(fs::path(gen_out) / "instance.json", g.instance);
      write_json_file(fs::path(gen_out) / "hidden.json", constraints_to_json(g.hidden));
      write_json_file(fs::path(gen_out) / "language.json", g.language);
      std::cout << json{{"n", gen_cfg.n},
                        {"horizon", g.instance.horizon()},
                        {"hidden", g.hidden.size()},
                        {"non_vacuous_seps", g.non_vacuous_seps}}
                       .dump()
                << '\n';
      return 0;
    }

    if (*solve_cmd) {
      const Instance inst = read_json_file(solve_instance).get<Instance>();
      const ConstraintSet cs =
          solve_constraints.empty() ? ConstraintSet{} : constraints_from_json(read_json_file(solve_constraints));
      const SolveResult r = solve_brute ? brute_force(inst, cs) : solve(inst, cs, solve_limit, solve_seed);
      emit(json(r), solve_out);
      return 0;
    }

    if (*run) {
      const Instance inst = read_json_file(run_instance).get<Instance>();
      const ConstraintSet hidden = constraints_from_json(read_json_file(run_hidden));
      const LanguageConfig lang =
          run_language.empty() ? default_language(inst) : read_json_file(run_language).get<LanguageConfig>();
      HiddenOracle oracle(inst, hidden);
      const Method m = method_from_string(run_method);
      json out;
      switch (m) {
      case Method::PG:
        out = priority_greedy(inst, oracle);
        break;
      case Method::FAO: {
        FaoConfig fc{lang, run_budget, run_t_iter, run_t_final, run_seed,
                     run_fao_random ? FaoProposals::RandomFeasible : FaoProposals::SolveUnderLearned};
        out = fao(inst, oracle, fc);
        break;
      }
      case Method::LO: {
        LoConfig lc{lang, run_q, run_t_iter, run_t_final, run_seed};
        const LoResult r = learn_optimize(inst, oracle, lc);
        if (!run_trace.empty())
          write_trace_jsonl(run_trace, r.trace);
        out = run_summary(r);
        break;
      }
      case Method::REF:
        out = reference_solve(inst, hidden, run_t_ref);
        break;
      }
      out["method"] = to_string(m);
      out["oracle"] = oracle.stats();
      emit(out, run_summary_path);
      return 0;
    }

    if (*exp) {
      ExperimentConfig cfg = exp_config.empty()
                                 ? (exp_full ? ExperimentConfig::full_scale() : ExperimentConfig{})
                                 : experiment_config_from_json(read_json_file(exp_config),
                                                               fs::path(exp_config).parent_path());
      if (exp_full && !exp_config.empty()) {
        const ExperimentConfig p = ExperimentConfig::full_scale();
        cfg.n_values = p.n_values;
        cfg.t_iter = p.t_iter;
        cfg.t_final = p.t_final;
        cfg.t_reference = p.t_reference;
      }
      if (!exp_n.empty())
        cfg.n_values = exp_n;
      if (!exp_seeds.empty())
        cfg.seeds = exp_seeds;
      if (!exp_methods.empty()) {
        cfg.methods.clear();
        for (const std::string &m : exp_methods)
          cfg.methods.push_back(method_from_string(m));
      }
      if (exp_q > 0)
        cfg.query_cutoff = exp_q;
      if (exp_budget > 0)
        cfg.fao_budget = exp_budget;
      if (exp_t_iter > 0)
        cfg.t_iter = exp_t_iter;
      if (exp_t_final > 0)
        cfg.t_final = exp_t_final;
      if (exp_t_ref > 0)
        cfg.t_reference = exp_t_ref;
      if (exp_jobs > 0)
        cfg.jobs = exp_jobs;
      if (exp_no_timing)
        cfg.record_timing = false;

      const fs::path out_dir(exp_out);
      fs::create_directories(out_dir);
      if (!exp_no_traces)
        cfg.trace_dir = out_dir / "traces";

      const std::vector<MetricsRow> rows = run_experiment(cfg);
      {
        std::ofstream f(out_dir / "results.csv");
        write_results_csv(f, rows, cfg.record_timing);
      }
      {
        std::ofstream f(out_dir / "summary.csv");
        write_summary_csv(f, summarize(rows));
      }
      write_summary_csv(std::cout, summarize(rows));
      const auto failed = std::count_if(rows.begin(), rows.end(), [](const MetricsRow &r) { return r.failed(); });
      if (failed > 0)
        std::cerr << failed << " row(s) failed\n";
      return exp_strict && failed > 0 ? 2 : 0;
    }

    if (*tp) {
      std::ifstream in(tp_trace);
      const std::vector<TracePoint> points = read_trace_points(in);
      if (tp_out.empty() || tp_out == "-") {
        write_trace_plot_csv(std::cout, points);
      } else {
        std::ofstream f(tp_out);
        write_trace_plot_csv(f, points);
      }
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
