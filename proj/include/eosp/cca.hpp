#ifndef EOSP_CCA_HPP
#define EOSP_CCA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eosp/basis.hpp"
#include "eosp/oracle.hpp"

namespace eosp {

/// Raised when a rejection can be explained neither by a justified separation
/// nor by a violated capacity candidate.
class AcquisitionStuck : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One two-task partial query.
struct Probe {
  TaskId i{0};
  TaskId j{0};
  Slot slot_i{kUnscheduled};
  Slot slot_j{kUnscheduled};
  bool accepted{false};
  /// Candidate delta this probe witnessed; empty for the gate probe at the
  /// rejected schedule's own slots.
  std::optional<int> candidate;

  int gap() const { return slot_i > slot_j ? slot_i - slot_j : slot_j - slot_i; }
};

struct GapSearchResult {
  std::optional<int> delta_star;
  /// The rejected probe that justified delta_star.
  std::optional<Probe> witness;
  std::vector<Probe> probes;
};

/// Book-keeping for one pair examined during an acquisition.
struct PairSearch {
  TaskPair pair;
  std::size_t candidates{0};
  std::size_t search_probes{0};
  bool gate_probed{false};
  std::optional<int> delta_star;
};

enum class AcquisitionKind { SepLearned, CapFallback };

struct AcquisitionOutcome {
  Constraint learned;
  AcquisitionKind kind{AcquisitionKind::SepLearned};
  std::int64_t partial_queries_used{0};
  std::vector<Probe> probes;
  std::vector<PairSearch> searches;
  std::size_t basis_size_after{0};
};

/// Pairs with both tasks scheduled whose gap is below their strongest remaining
/// candidate, strongest candidate first, ties by (i, j).
std::vector<TaskPair> violated_pairs(const Assignment &e, const CandidateBasis &b);

/// Submits {x_i = s_i, x_j = s_j, others 0} as a partial query.
bool pair_probe(TaskId i, TaskId j, Slot s_i, Slot s_j, HiddenOracle &oracle);

/// Window-consistent slots whose gap is delta-1, or the largest achievable gap
/// below delta; smallest s_i, then smallest s_j. Empty if every gap is >= delta.
std::optional<std::pair<Slot, Slot>> witness_slots(TaskId i, TaskId j, int delta,
                                                   const Instance &inst);

/// Binary search over B_ij for the largest candidate whose witness probe is
/// rejected. Assumes justification is monotone downward.
GapSearchResult justified_gap_search(TaskId i, TaskId j, const CandidateBasis &b,
                                     const Instance &inst, HiddenOracle &oracle);

/// Smallest violated width w', then the largest k still violated at w'.
/// Throws AcquisitionStuck if e violates no capacity candidate.
CapacityConstraint capacity_fallback(const Assignment &e, const CandidateBasis &b);

/// Adds c to a learned set, dropping learned constraints it dominates.
void add_learned(ConstraintSet &learned, const Constraint &c);

/// Learns exactly one constraint from a rejected main proposal, updating
/// `learned` and pruning `basis`.
///
/// Pairs are examined in violated_pairs order. For each, the gap search runs
/// first; the pair's own slots are then probed only if the rejected witness
/// does not already cover them (witness gap >= the pair's gap in e). Two-task
/// verdicts are monotone in the gap for this constraint language, so this
/// matches probing the pair first and skipping it on "yes".
AcquisitionOutcome acquire(const Assignment &e, ConstraintSet &learned, CandidateBasis &basis,
                           const Instance &inst, HiddenOracle &oracle);

} // namespace eosp

#endif
