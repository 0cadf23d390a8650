#ifndef EOSP_SOLVER_HPP
#define EOSP_SOLVER_HPP

#include <cstdint>
#include <stdexcept>

#include "eosp/model.hpp"

namespace eosp {

inline constexpr double kDefaultSolveTimeLimit = 20.0;
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Objective values closer than this are treated as equal.
inline constexpr double kValueTolerance = 1e-9;

struct SolveResult {
  Assignment assignment;
  double value{0.0};
  /// Search finished inside the limit, so no feasible assignment is better.
  bool proven_optimal{false};
  double elapsed{0.0};
  std::int64_t nodes_explored{0};
};

class EnumerationLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Anytime depth-first branch and bound maximizing the total weight of
/// scheduled tasks under `constraints`.
///
/// Tasks are branched in descending weight (ties by id), slots ascending and
/// then "unscheduled". Separations prune partner domains when a task is fixed,
/// capacities prune every slot that would overfill a window. The bound adds the
/// heaviest undecided tasks that still have a slot, capped by the free capacity
/// of disjoint w-blocks. The returned assignment is always feasible; the
/// all-unscheduled assignment is the fallback incumbent.
///
/// Search order is fixed, so results are reproducible; `seed` is recorded for
/// the interface but does not alter the sequential search.
SolveResult solve(const Instance &inst, const ConstraintSet &constraints,
                  double time_limit = kDefaultSolveTimeLimit, std::uint64_t seed = 0);

/// Exhaustive enumeration of every assignment. Throws EnumerationLimitError when
/// prod(|W_j| + 1) exceeds `enumeration_cap`.
SolveResult brute_force(const Instance &inst, const ConstraintSet &constraints,
                        std::uint64_t enumeration_cap = kDefaultEnumerationCap);

} // namespace eosp

#endif
