#ifndef EOSP_BASELINES_HPP
#define EOSP_BASELINES_HPP

#include <cstdint>

#include "eosp/basis.hpp"
#include "eosp/oracle.hpp"
#include "eosp/solver.hpp"

namespace eosp {

struct BaselineResult {
  Assignment assignment;
  double value{0.0};
  std::int64_t main_queries{0};
  std::int64_t partial_queries{0};
  double wall_time{0.0};

  // FAO only.
  std::int64_t acquisition_main_queries{0};
  std::int64_t repair_queries{0};
  ConstraintSet learned;
  bool acquisition_stuck{false};
};

/// Priority greedy without constraint knowledge: heaviest tasks first, each at
/// the earliest free slot of its window; then drop the lightest scheduled task
/// (ties: smallest id) until the oracle accepts.
BaselineResult priority_greedy(const Instance &inst, HiddenOracle &oracle);

enum class FaoProposals {
  /// Optimum under the current learned set, as in learn-and-optimize.
  SolveUnderLearned,
  /// Random schedules that satisfy the learned set.
  RandomFeasible,
};

struct FaoConfig {
  LanguageConfig language;
  int budget{100};
  double t_iter{kDefaultSolveTimeLimit};
  double t_final{kDefaultSolveTimeLimit};
  std::uint64_t seed{0};
  FaoProposals proposals{FaoProposals::SolveUnderLearned};
};

/// Full acquire-then-optimise: `budget` main queries of acquisition (never
/// stopping early), a final solve under the learned set, then drop-lightest
/// repair if the oracle rejects it. Returns the better of the repaired
/// schedule and any schedule accepted during acquisition.
BaselineResult fao(const Instance &inst, HiddenOracle &oracle, const FaoConfig &cfg);

/// Drops the lightest scheduled task (ties: smallest id) until the oracle
/// accepts. Returns the number of main queries issued.
std::int64_t repair_by_dropping(const Instance &inst, HiddenOracle &oracle, Assignment &e);

} // namespace eosp

#endif
