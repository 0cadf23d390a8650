#ifndef EOSP_EXPERIMENT_HPP
#define EOSP_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eosp/baselines.hpp"
#include "eosp/generator.hpp"
#include "eosp/learn_optimize.hpp"

namespace eosp {

enum class Method { PG, FAO, LO, REF };

std::string to_string(Method m);
Method method_from_string(const std::string &s);

/// A fixed (instance, hidden model, language) cell used instead of generated ones.
struct ExperimentCase {
  Instance instance;
  ConstraintSet hidden;
  LanguageConfig language;
};

struct ExperimentConfig {
  std::vector<int> n_values{10, 20};
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19};
  int query_cutoff{100};
  int fao_budget{100};
  double t_iter{2.0};
  double t_final{2.0};
  double t_reference{20.0};
  std::vector<Method> methods{Method::PG, Method::FAO, Method::LO, Method::REF};
  FaoProposals fao_proposals{FaoProposals::SolveUnderLearned};
  /// Generator settings; n and seed are overwritten per cell.
  GenConfig generator;
  /// When non-empty, these cells replace the generated (n, seed) grid.
  std::vector<ExperimentCase> fixed_cases;
  /// Worker threads over independent cells.
  int jobs{1};
  /// When set, learn-and-optimize traces are written here as JSONL.
  std::optional<std::filesystem::path> trace_dir;
  /// When false, results.csv carries wall_time = 0.
  bool record_timing{true};

  /// Full sweep: n in 10..50, 20 s per solve, 120 s reference.
  static ExperimentConfig full_scale();
  void validate() const;
};

struct MetricsRow {
  int n{0};
  std::uint64_t seed{0};
  Method method{Method::REF};
  double value{0.0};
  double ref_value{0.0};
  double gap_pct{0.0};
  /// L&O: loop iterations. FAO: acquisition queries. PG: every main query.
  std::int64_t main_queries{0};
  std::int64_t partial_queries{0};
  /// -1 where not applicable.
  int q_star{-1};
  double wall_time{0.0};
  double frac{0.0};
  bool ref_proven{false};
  /// Every main query, including L&O's seed confirmation and final check and FAO's repair.
  std::int64_t total_main_queries{0};
  /// Returned schedule satisfies the hidden model.
  bool feasible{false};
  /// "ok" or "failed: <reason>".
  std::string status{"ok"};

  bool failed() const { return status != "ok"; }
};

/// |learned ∩ hidden| / |hidden| under exact equality. Throws on empty hidden.
double exact_frac(const ConstraintSet &learned, const ConstraintSet &hidden);

/// Solve on the full hidden model; proven_optimal marks a certified reference.
SolveResult reference_solve(const Instance &inst, const ConstraintSet &hidden, double t_reference);

/// Runs every requested method on every cell with an isolated oracle per
/// method. Rows come back in (cell, method) order regardless of `jobs`.
std::vector<MetricsRow> run_experiment(const ExperimentConfig &cfg);

struct SummaryRow {
  int n{0};
  Method method{Method::REF};
  std::size_t runs{0};
  std::size_t failed{0};
  double gap_mean{0.0};
  double gap_std{0.0};
  double main_mean{0.0};
  double partial_mean{0.0};
  /// Mean over rows where q* applies; -1 if none.
  double q_star_mean{-1.0};
  double time_mean{0.0};
  double frac_mean{0.0};
  /// FAO mean time / L&O mean time, set on the L&O row; 0 when unavailable.
  double speedup{0.0};
  /// Some reference in the group was not proven optimal.
  bool dagger{false};
};

/// Per (n, method) means and sample standard deviations (n-1; 0 for one run).
std::vector<SummaryRow> summarize(const std::vector<MetricsRow> &rows);

/// With timing off, wall_time is written as 0 so identical configs give identical bytes.
void write_results_csv(std::ostream &out, const std::vector<MetricsRow> &rows, bool timing = true);
std::vector<MetricsRow> read_results_csv(std::istream &in);
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &summary);

/// One point of a convergence plot: solver value under L, best accepted value,
/// and whether the proposal was rejected.
struct TracePoint {
  int iteration{0};
  double v_L{0.0};
  double best_so_far{0.0};
  bool rejected{false};
};

std::vector<TracePoint> trace_points(const RunTrace &trace);
/// Reads the per-iteration JSONL trace written by write_trace_jsonl.
std::vector<TracePoint> read_trace_points(std::istream &jsonl);
/// Header: iteration,v_L,best_so_far,rejected
void write_trace_plot_csv(std::ostream &out, const std::vector<TracePoint> &points);

} // namespace eosp

#endif
