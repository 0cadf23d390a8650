#ifndef EOSP_MODEL_HPP
#define EOSP_MODEL_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace eosp {

/// Thrown when an instance, assignment or constraint breaks its invariants.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using TaskId = int;
/// Slot index; 0 means unscheduled, scheduled slots live in 1..H.
using Slot = int;

inline constexpr Slot kUnscheduled = 0;

/// Contiguous visibility window [lo, hi].
struct Window {
  Slot lo{1};
  Slot hi{1};

  bool contains(Slot t) const { return t >= lo && t <= hi; }
  int length() const { return hi - lo + 1; }

  auto operator<=>(const Window &) const = default;
};

struct Task {
  TaskId id{1};
  double weight{1.0};
  Window window;

  bool operator==(const Task &) const = default;
};

class Instance {
public:
  Instance() = default;
  /// Validates: tasks carry ids 1..n in order, weights > 0, windows inside 1..horizon.
  Instance(int horizon, std::vector<Task> tasks);

  int horizon() const { return horizon_; }
  std::size_t size() const { return tasks_.size(); }
  const std::vector<Task> &tasks() const { return tasks_; }
  const Task &task(TaskId id) const { return tasks_.at(static_cast<std::size_t>(id - 1)); }

  double total_weight() const;

  bool operator==(const Instance &) const = default;

private:
  int horizon_{1};
  std::vector<Task> tasks_;
};

/// Complete slot assignment, one entry per task (index id-1).
class Assignment {
public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : slots_(n, kUnscheduled) {}
  explicit Assignment(std::vector<Slot> slots) : slots_(std::move(slots)) {}

  static Assignment empty_for(const Instance &inst) { return Assignment(inst.size()); }

  Slot operator[](TaskId id) const { return slots_.at(static_cast<std::size_t>(id - 1)); }
  void set(TaskId id, Slot t) { slots_.at(static_cast<std::size_t>(id - 1)) = t; }
  bool scheduled(TaskId id) const { return (*this)[id] != kUnscheduled; }

  std::size_t size() const { return slots_.size(); }
  std::span<const Slot> slots() const { return slots_; }
  std::size_t scheduled_count() const;
  /// Scheduled slots, sorted ascending (duplicates kept).
  std::vector<Slot> scheduled_slots() const;

  bool operator==(const Assignment &) const = default;

private:
  std::vector<Slot> slots_;
};

/// sep(i, j, delta): if both tasks are scheduled, |x_i - x_j| >= delta. Pair stored with i < j.
struct SeparationConstraint {
  TaskId i{1};
  TaskId j{2};
  int delta{1};

  auto operator<=>(const SeparationConstraint &) const = default;
};

/// cap(k, w): at most k scheduled tasks inside any w consecutive slots.
struct CapacityConstraint {
  int k{0};
  int w{1};

  auto operator<=>(const CapacityConstraint &) const = default;
};

using Constraint = std::variant<SeparationConstraint, CapacityConstraint>;
using ConstraintSet = std::set<Constraint>;

/// Canonicalizing constructor; throws on i == j or delta < 1.
SeparationConstraint make_sep(TaskId a, TaskId b, int delta);
/// Throws on k < 0 or w < 1.
CapacityConstraint make_cap(int k, int w);

/// Throws ValidationError unless every slot is 0 or inside its task's window.
void validate(const Instance &inst, const Assignment &e);

double objective_value(const Instance &inst, const Assignment &e);

bool satisfies_sep(const SeparationConstraint &c, const Assignment &e);
/// Windows of width w slide over the horizon without wrapping. Any k+1 scheduled
/// tasks spanning fewer than w slots violate; for w >= H this is a global count.
bool satisfies_cap(const CapacityConstraint &c, const Assignment &e);
bool satisfies(const Constraint &c, const Assignment &e);
bool is_feasible(const ConstraintSet &set, const Assignment &e);

/// True iff every assignment satisfying a also satisfies b.
bool dominates(const Constraint &a, const Constraint &b);

std::string to_string(const Constraint &c);
std::string to_string(const Assignment &e);

} // namespace eosp

#endif
