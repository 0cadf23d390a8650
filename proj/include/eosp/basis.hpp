#ifndef EOSP_BASIS_HPP
#define EOSP_BASIS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "eosp/model.hpp"

namespace eosp {

/// Parameters of the sep/cap constraint language.
struct LanguageConfig {
  int sep_delta_min{2};
  int sep_delta_max{10};
  int cap_center_k{1};
  int cap_center_w{1};
  int cap_radius{2};
  /// When set, replaces the (center, radius) neighbourhood.
  std::optional<std::vector<CapacityConstraint>> cap_candidates;

  void validate() const;
};

using TaskPair = std::pair<TaskId, TaskId>;

/// Candidate constraints still compatible with the evidence. Only ever shrinks.
class CandidateBasis {
public:
  CandidateBasis() = default;

  /// Every constraint of the language over this instance, unfiltered.
  static CandidateBasis language(const LanguageConfig &lang, const Instance &inst);
  /// Language filtered to the candidates an oracle-accepted seed schedule satisfies.
  static CandidateBasis instantiate(const LanguageConfig &lang, const Instance &inst,
                                    const Assignment &seed_schedule);

  /// Drops separations that no window-consistent slot pair can violate.
  std::size_t prune_vacuous(const Instance &inst);
  /// Drops every candidate the accepted assignment violates.
  std::size_t retain_consistent(const Assignment &e);
  /// Keeps only deltas > delta_star for the pair.
  std::size_t remove_sep_upto(TaskId i, TaskId j, int delta_star);
  /// Removes cap(k'', w'') with k'' >= k and w'' <= w.
  std::size_t remove_cap_dominated(int k, int w);

  bool empty() const { return sep_size() == 0 && cap_.empty(); }
  std::size_t size() const { return sep_size() + cap_.size(); }
  std::size_t sep_size() const { return sep_count_; }
  std::size_t cap_size() const { return cap_.size(); }

  /// Sorted ascending; empty when the pair has no candidates left.
  const std::vector<int> &deltas(TaskId i, TaskId j) const;
  const std::map<TaskPair, std::vector<int>> &separations() const { return sep_; }
  const std::set<CapacityConstraint> &capacities() const { return cap_; }

  bool contains(const Constraint &c) const;
  /// Every candidate as a constraint.
  ConstraintSet constraints() const;
  /// Same feasible set as constraints(): strongest delta per pair plus the
  /// non-dominated capacities.
  ConstraintSet strongest() const;

  bool operator==(const CandidateBasis &) const = default;

private:
  void erase_empty(std::map<TaskPair, std::vector<int>>::iterator it);

  std::map<TaskPair, std::vector<int>> sep_;
  std::set<CapacityConstraint> cap_;
  std::size_t sep_count_{0};
};

/// Smallest |t_i - t_j| over W_i x W_j.
int min_window_gap(const Window &a, const Window &b);
/// Largest |t_i - t_j| over W_i x W_j.
int max_window_gap(const Window &a, const Window &b);

} // namespace eosp

#endif
