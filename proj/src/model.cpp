#include "eosp/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace eosp {

Instance::Instance(int horizon, std::vector<Task> tasks)
    : horizon_(horizon), tasks_(std::move(tasks)) {
  if (horizon_ < 1)
    throw ValidationError("horizon must be positive");
  for (std::size_t idx = 0; idx < tasks_.size(); ++idx) {
    const Task &t = tasks_[idx];
    if (t.id != static_cast<TaskId>(idx + 1))
      throw ValidationError("task ids must be 1..n in order, got " + std::to_string(t.id) +
                            " at position " + std::to_string(idx + 1));
    if (!(t.weight > 0.0))
      throw ValidationError("task " + std::to_string(t.id) + " has non-positive weight");
    if (t.window.lo < 1 || t.window.hi > horizon_ || t.window.lo > t.window.hi)
      throw ValidationError("task " + std::to_string(t.id) + " window outside 1..horizon or empty");
  }
}

double Instance::total_weight() const {
  double s = 0.0;
  for (const Task &t : tasks_)
    s += t.weight;
  return s;
}

std::size_t Assignment::scheduled_count() const {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(), [](Slot t) { return t != kUnscheduled; }));
}

std::vector<Slot> Assignment::scheduled_slots() const {
  std::vector<Slot> out;
  out.reserve(slots_.size());
  for (Slot t : slots_)
    if (t != kUnscheduled)
      out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

SeparationConstraint make_sep(TaskId a, TaskId b, int delta) {
  if (a == b)
    throw ValidationError("separation needs two distinct tasks");
  if (delta < 1)
    throw ValidationError("separation delta must be >= 1");
  return SeparationConstraint{std::min(a, b), std::max(a, b), delta};
}

CapacityConstraint make_cap(int k, int w) {
  if (k < 0)
    throw ValidationError("capacity k must be >= 0");
  if (w < 1)
    throw ValidationError("capacity window must be >= 1");
  return CapacityConstraint{k, w};
}

void validate(const Instance &inst, const Assignment &e) {
  if (e.size() != inst.size())
    throw ValidationError("assignment has " + std::to_string(e.size()) + " entries for " +
                          std::to_string(inst.size()) + " tasks");
  for (const Task &t : inst.tasks()) {
    const Slot s = e[t.id];
    if (s != kUnscheduled && !t.window.contains(s))
      throw ValidationError("task " + std::to_string(t.id) + " at slot " + std::to_string(s) +
                            " outside its window");
  }
}

double objective_value(const Instance &inst, const Assignment &e) {
  validate(inst, e);
  double v = 0.0;
  for (const Task &t : inst.tasks())
    if (e.scheduled(t.id))
      v += t.weight;
  return v;
}

bool satisfies_sep(const SeparationConstraint &c, const Assignment &e) {
  const Slot a = e[c.i];
  const Slot b = e[c.j];
  if (a == kUnscheduled || b == kUnscheduled)
    return true;
  return std::abs(a - b) >= c.delta;
}

bool satisfies_cap(const CapacityConstraint &c, const Assignment &e) {
  const std::vector<Slot> s = e.scheduled_slots();
  const auto k = static_cast<std::size_t>(c.k);
  for (std::size_t a = 0; a + k < s.size(); ++a)
    if (s[a + k] - s[a] < c.w)
      return false;
  return true;
}

bool satisfies(const Constraint &c, const Assignment &e) {
  return std::visit(
      [&](const auto &x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SeparationConstraint>)
          return satisfies_sep(x, e);
        else
          return satisfies_cap(x, e);
      },
      c);
}

bool is_feasible(const ConstraintSet &set, const Assignment &e) {
  return std::all_of(set.begin(), set.end(), [&](const Constraint &c) { return satisfies(c, e); });
}

bool dominates(const Constraint &a, const Constraint &b) {
  if (const auto *sa = std::get_if<SeparationConstraint>(&a)) {
    const auto *sb = std::get_if<SeparationConstraint>(&b);
    return sb && sa->i == sb->i && sa->j == sb->j && sa->delta >= sb->delta;
  }
  const auto &ca = std::get<CapacityConstraint>(a);
  const auto *cb = std::get_if<CapacityConstraint>(&b);
  return cb && ca.k <= cb->k && ca.w >= cb->w;
}

std::string to_string(const Constraint &c) {
  std::ostringstream os;
  if (const auto *s = std::get_if<SeparationConstraint>(&c))
    os << "sep(" << s->i << "," << s->j << "," << s->delta << ")";
  else {
    const auto &cap = std::get<CapacityConstraint>(c);
    os << "cap(" << cap.k << "," << cap.w << ")";
  }
  return os.str();
}

std::string to_string(const Assignment &e) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t idx = 0; idx < e.size(); ++idx) {
    if (e.slots()[idx] == kUnscheduled)
      continue;
    os << (first ? "" : ", ") << (idx + 1) << "=" << e.slots()[idx];
    first = false;
  }
  os << "}";
  return os.str();
}

} // namespace eosp
