#include <doctest.h>

#include <sstream>

#include "eosp/experiment.hpp"
#include "eosp/json_io.hpp"
#include "fixtures.hpp"

using namespace eosp;
using namespace eosp::fixtures;

namespace {

MetricsRow row(int n, Method m, double gap, double time, bool proven = true) {
  MetricsRow r;
  r.n = n;
  r.method = m;
  r.gap_pct = gap;
  r.wall_time = time;
  r.ref_proven = proven;
  r.main_queries = 4;
  return r;
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n_values = {8};
  cfg.seeds = {0, 1, 2};
  cfg.t_iter = 2.0;
  cfg.t_final = 2.0;
  cfg.t_reference = 5.0;
  cfg.query_cutoff = 20;
  cfg.fao_budget = 20;
  return cfg;
}

} // namespace

TEST_CASE("method names") {
  for (Method m : {Method::PG, Method::FAO, Method::LO, Method::REF})
    CHECK(method_from_string(to_string(m)) == m);
  CHECK(method_from_string("lo") == Method::LO);
  CHECK_THROWS_AS(method_from_string("xyz"), ValidationError);
}

TEST_CASE("exact_frac") {
  const ConstraintSet hidden{make_sep(1, 2, 3), make_sep(1, 3, 4), make_cap(1, 5)};
  CHECK(exact_frac({}, hidden) == 0.0);
  // A stronger delta on the same pair does not count.
  CHECK(exact_frac({make_sep(1, 2, 4)}, hidden) == 0.0);
  CHECK(exact_frac({make_sep(1, 2, 3), make_cap(1, 5), make_sep(2, 3, 2)}, hidden) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(exact_frac(hidden, hidden) == 1.0);
  CHECK_THROWS_AS(exact_frac(hidden, {}), ValidationError);
}

TEST_CASE("summarize") {
  std::vector<MetricsRow> rows{row(10, Method::LO, 0.0, 1.0), row(10, Method::LO, 2.0, 3.0),
                               row(10, Method::LO, 4.0, 2.0), row(10, Method::FAO, 1.0, 8.0),
                               row(10, Method::FAO, 1.0, 4.0, false)};
  rows[1].q_star = 3;
  rows[2].q_star = 5;
  MetricsRow broken = row(10, Method::LO, 99.0, 99.0);
  broken.status = "failed: boom";
  rows.push_back(broken);

  const std::vector<SummaryRow> s = summarize(rows);
  REQUIRE(s.size() == 2);
  const SummaryRow &fao_row = s[0].method == Method::FAO ? s[0] : s[1];
  const SummaryRow &lo_row = s[0].method == Method::LO ? s[0] : s[1];
  CHECK(lo_row.runs == 4);
  CHECK(lo_row.failed == 1);
  CHECK(lo_row.gap_mean == doctest::Approx(2.0));
  CHECK(lo_row.gap_std == doctest::Approx(2.0)); // sample std of {0, 2, 4}
  CHECK(lo_row.q_star_mean == doctest::Approx(4.0));
  CHECK(lo_row.time_mean == doctest::Approx(2.0));
  CHECK(lo_row.speedup == doctest::Approx(3.0));
  CHECK_FALSE(lo_row.dagger);
  CHECK(fao_row.dagger);
  CHECK(fao_row.gap_std == 0.0);
  CHECK(fao_row.q_star_mean == -1.0);

  const std::vector<SummaryRow> one = summarize({row(20, Method::PG, 7.0, 1.0)});
  CHECK(one.at(0).gap_std == 0.0);
}

TEST_CASE("results csv round trip") {
  MetricsRow r = row(10, Method::FAO, 12.5, 0.125);
  r.seed = 7;
  r.value = 1.0 / 3.0;
  r.ref_value = 0.1 + 0.2;
  r.partial_queries = 11;
  r.frac = 0.25;
  r.total_main_queries = 101;
  r.feasible = true;
  MetricsRow f = row(10, Method::LO, 0.0, 0.0);
  f.status = "failed: bad, \"quoted\" input";

  std::stringstream ss;
  write_results_csv(ss, {r, f});
  const std::vector<MetricsRow> back = read_results_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].value == r.value);
  CHECK(back[0].ref_value == r.ref_value);
  CHECK(back[0].seed == 7);
  CHECK(back[0].method == Method::FAO);
  CHECK(back[0].wall_time == 0.125);
  CHECK(back[0].q_star == -1);
  CHECK(back[0].feasible);
  CHECK(back[0].total_main_queries == 101);
  CHECK(back[1].status == f.status);
  CHECK(back[1].failed());

  std::stringstream untimed;
  write_results_csv(untimed, {r}, false);
  CHECK(read_results_csv(untimed).at(0).wall_time == 0.0);

  std::stringstream bad("n,seed\n");
  CHECK_THROWS_AS(read_results_csv(bad), ValidationError);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.jobs = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = ExperimentConfig{};
  cfg.seeds.clear();
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = ExperimentConfig{};
  cfg.t_iter = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  const ExperimentConfig full = ExperimentConfig::full_scale();
  CHECK(full.n_values == std::vector<int>{10, 20, 30, 40, 50});
  CHECK(full.t_reference == 120.0);
}

TEST_CASE("config from json") {
  const json j = json::parse(R"({"n_values": [10], "seeds": [3, 4], "methods": ["lo", "pg"],
                                 "q_cutoff": 7, "jobs": 2, "timing": false, "fao_proposals": "random",
                                 "generator": {"cap_k": 3}})");
  const ExperimentConfig cfg = experiment_config_from_json(j, ".");
  CHECK(cfg.n_values == std::vector<int>{10});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 4});
  CHECK(cfg.methods == std::vector<Method>{Method::LO, Method::PG});
  CHECK(cfg.query_cutoff == 7);
  CHECK(cfg.jobs == 2);
  CHECK_FALSE(cfg.record_timing);
  CHECK(cfg.fao_proposals == FaoProposals::RandomFeasible);
  CHECK(cfg.generator.cap_k == 3);
  CHECK_THROWS_AS(experiment_config_from_json(json::parse(R"({"fao_proposals": "x"})"), "."),
                  ValidationError);
}

TEST_CASE("json round trips") {
  const Instance inst = worked_example();
  CHECK(json(inst).get<Instance>() == inst);
  const ConstraintSet hidden = worked_example_hidden();
  CHECK(constraints_from_json(constraints_to_json(hidden)) == hidden);
  const LanguageConfig lang = worked_example_language();
  const LanguageConfig back = json(lang).get<LanguageConfig>();
  CHECK(back.sep_delta_max == 4);
  CHECK(back.cap_candidates == lang.cap_candidates);
  CHECK(json(slots({2, 0, 7})).get<Assignment>() == slots({2, 0, 7}));
  CHECK_THROWS_AS(json::parse(R"({"type": "foo"})").get<Constraint>(), ValidationError);
  CHECK_THROWS_AS(json::parse(R"({"horizon": 5, "tasks": [{"id": 1}]})").get<Instance>(), ValidationError);
}

TEST_CASE("small experiment") {
  ExperimentConfig cfg = small_config();
  const std::vector<MetricsRow> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 12);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].seed == k / 4);
    CHECK(rows[k].method == cfg.methods[k % 4]);
    CHECK_FALSE(rows[k].failed());
    CHECK(rows[k].feasible);
    CHECK(rows[k].gap_pct >= -1e-9);
    if (rows[k].method == Method::LO) {
      CHECK(rows[k].q_star >= 0);
      CHECK(rows[k].main_queries <= cfg.query_cutoff);
    } else {
      CHECK(rows[k].q_star == -1);
    }
    if (rows[k].method == Method::REF || rows[k].method == Method::PG)
      CHECK(rows[k].frac == 0.0);
  }

  cfg.jobs = 3;
  cfg.record_timing = false;
  std::stringstream parallel, serial;
  write_results_csv(parallel, run_experiment(cfg), false);
  cfg.jobs = 1;
  write_results_csv(serial, run_experiment(cfg), false);
  CHECK(parallel.str() == serial.str());
}

TEST_CASE("a failing method yields a failed row, others still run") {
  ExperimentConfig cfg = small_config();
  ExperimentCase c{worked_example(), {make_cap(0, 1)}, worked_example_language()};
  cfg.fixed_cases = {c};
  const std::vector<MetricsRow> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 4);
  for (const MetricsRow &r : rows) {
    if (r.method == Method::LO)
      CHECK(r.failed());
    else
      CHECK_FALSE(r.failed());
  }
}

TEST_CASE("trace plot data") {
  const Instance inst = worked_example();
  HiddenOracle o(inst, worked_example_hidden());
  LoConfig lc;
  lc.language = worked_example_language();
  const LoResult r = learn_optimize(inst, o, lc);

  const std::vector<TracePoint> pts = trace_points(r.trace);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].rejected);
  CHECK_FALSE(pts[1].rejected);
  CHECK(pts[1].best_so_far == 5.0);

  std::stringstream jsonl;
  for (const IterationRecord &rec : r.trace.iterations)
    jsonl << json(rec).dump() << '\n';
  const std::vector<TracePoint> back = read_trace_points(jsonl);
  REQUIRE(back.size() == 2);
  CHECK(back[0].v_L == 7.0);

  std::stringstream csv;
  write_trace_plot_csv(csv, back);
  CHECK(csv.str() == "iteration,v_L,best_so_far,rejected\n1,7,3,1\n2,5,5,0\n");
}
