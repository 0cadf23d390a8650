#ifndef EOSP_LEARN_OPTIMIZE_HPP
#define EOSP_LEARN_OPTIMIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "eosp/cca.hpp"
#include "eosp/solver.hpp"

namespace eosp {

enum class StopReason { AcceptedOpt, BasisExhausted, ModelConverged, QueryCutoff, AcquisitionStuck };

std::string to_string(StopReason r);

struct IterationRecord {
  int q{0};
  Assignment proposal;
  double v_L{0.0};
  bool proven_L{false};
  bool accepted{false};
  /// Set on rejected iterations.
  std::optional<AcquisitionOutcome> acquisition;
  std::optional<double> v_LuB;
  bool proven_LuB{false};
  double best_value_so_far{0.0};
};

struct RunTrace {
  std::vector<IterationRecord> iterations;
  Assignment seed_schedule;
  double seed_value{0.0};
  int q_star{0};
  StopReason stop_reason{StopReason::QueryCutoff};
  ConstraintSet learned_final;
  CandidateBasis basis_final;
  std::size_t basis_initial_size{0};
  std::size_t basis_after_vacuous{0};
  /// Main queries issued by the loop itself (one per iteration).
  std::int64_t loop_main_queries{0};
  /// Every main query, including the seed confirmation and the final check.
  std::int64_t main_queries{0};
  std::int64_t partial_queries{0};
  bool final_solve_checked{false};
  bool final_solve_adopted{false};
  double wall_time{0.0};
};

struct LoConfig {
  LanguageConfig language;
  int query_cutoff{100};
  double t_iter{kDefaultSolveTimeLimit};
  double t_final{kDefaultSolveTimeLimit};
  std::uint64_t seed{0};
};

struct LoResult {
  Assignment best;
  double best_value{0.0};
  RunTrace trace;
};

/// Highest-weight task (ties by smallest id) at its earliest slot, confirmed by
/// a main query. Throws ValidationError if the oracle rejects it.
Assignment init_seed_schedule(const Instance &inst, HiddenOracle &oracle);

/// Interleaved learn-and-optimize loop.
///
/// Each iteration proposes the optimum under the learned set L. An accepted
/// proposal ends the run. A rejection triggers one acquisition; the run then
/// stops if the candidate basis is exhausted, or if the optimum under L ∪ B
/// (solved only for this test) proves equal to the proposal's value. After the
/// loop, a final solve under L with `t_final` is adopted when it is strictly
/// better and the oracle accepts it.
LoResult learn_optimize(const Instance &inst, HiddenOracle &oracle, const LoConfig &cfg);

} // namespace eosp

#endif
