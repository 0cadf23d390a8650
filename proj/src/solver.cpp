#include "eosp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <utility>

namespace eosp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Search state copied per branch. Domains are window-relative bitsets packed in
// one buffer; `slots` holds the decided slot of each task (0 = unscheduled or
// still open, the branching depth tells which).
struct Node {
  std::vector<std::uint64_t> bits;
  std::vector<Slot> slots;
  std::vector<int> per_slot; // scheduled tasks per slot, index 1..H
};

class BranchAndBound {
public:
  BranchAndBound(const Instance &inst, const ConstraintSet &constraints, double time_limit)
      : inst_(inst), n_(inst.size()), horizon_(inst.horizon()), time_limit_(time_limit) {
    for (const Task &t : inst.tasks()) {
      offset_.push_back(words_);
      words_ += static_cast<std::size_t>(t.window.length() + 63) / 64;
    }
    offset_.push_back(words_);

    sep_.resize(n_);
    for (const Constraint &c : constraints) {
      if (const auto *s = std::get_if<SeparationConstraint>(&c)) {
        if (s->i < 1 || s->j > static_cast<TaskId>(n_) || s->i >= s->j)
          throw ValidationError("separation " + to_string(c) + " does not fit the instance");
        add_sep(static_cast<std::size_t>(s->i - 1), static_cast<std::size_t>(s->j - 1), s->delta);
        add_sep(static_cast<std::size_t>(s->j - 1), static_cast<std::size_t>(s->i - 1), s->delta);
      } else {
        caps_.push_back(std::get<CapacityConstraint>(c));
      }
    }
    // Keep only non-dominated capacities.
    std::vector<CapacityConstraint> kept;
    for (const CapacityConstraint &c : caps_) {
      const bool dominated = std::any_of(caps_.begin(), caps_.end(), [&](const auto &o) {
        return o != c && o.k <= c.k && o.w >= c.w;
      });
      if (!dominated)
        kept.push_back(c);
    }
    caps_ = std::move(kept);

    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return inst.tasks()[a].weight > inst.tasks()[b].weight;
    });
    position_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p)
      position_[order_[p]] = p;
  }

  SolveResult run() {
    start_ = Clock::now();
    Node root;
    root.bits.assign(words_, 0);
    root.slots.assign(n_, kUnscheduled);
    root.per_slot.assign(static_cast<std::size_t>(horizon_) + 2, 0);
    for (std::size_t t = 0; t < n_; ++t) {
      const int len = inst_.tasks()[t].window.length();
      for (int b = 0; b < len; ++b)
        root.bits[offset_[t] + static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
    }
    propagate_caps(root, 0);

    best_ = Assignment(n_);
    best_value_ = 0.0;
    dfs(0, 0.0, root);

    SolveResult r;
    r.assignment = best_;
    r.value = best_value_;
    r.proven_optimal = !aborted_;
    r.elapsed = seconds_since(start_);
    r.nodes_explored = nodes_;
    return r;
  }

private:
  void add_sep(std::size_t a, std::size_t b, int delta) {
    for (auto &[partner, d] : sep_[a])
      if (partner == b) {
        d = std::max(d, delta);
        return;
      }
    sep_[a].emplace_back(b, delta);
  }

  bool domain_empty(const Node &node, std::size_t t) const {
    for (std::size_t w = offset_[t]; w < offset_[t + 1]; ++w)
      if (node.bits[w] != 0)
        return false;
    return true;
  }

  // Clears slots [lo, hi] from the domain of task t.
  void clear_slots(Node &node, std::size_t t, Slot lo, Slot hi) const {
    const Window &win = inst_.tasks()[t].window;
    lo = std::max(lo, win.lo);
    hi = std::min(hi, win.hi);
    for (Slot s = lo; s <= hi; ++s) {
      const auto b = static_cast<std::size_t>(s - win.lo);
      node.bits[offset_[t] + b / 64] &= ~(std::uint64_t{1} << (b % 64));
    }
  }

  bool has_slot(const Node &node, std::size_t t, Slot s) const {
    const auto b = static_cast<std::size_t>(s - inst_.tasks()[t].window.lo);
    return (node.bits[offset_[t] + b / 64] >> (b % 64)) & 1U;
  }

  // Removes, for tasks at positions >= from, every slot that would push some
  // w-window above k.
  void propagate_caps(Node &node, std::size_t from) const {
    if (caps_.empty())
      return;
    const auto H = static_cast<std::size_t>(horizon_);
    std::vector<int> prefix(H + 1, 0);
    for (std::size_t s = 1; s <= H; ++s)
      prefix[s] = prefix[s - 1] + node.per_slot[s];
    std::vector<int> cover(H + 2, 0);
    for (const CapacityConstraint &c : caps_) {
      const auto w = std::min(static_cast<std::size_t>(c.w), H);
      for (std::size_t a = 1; a + w - 1 <= H; ++a)
        if (prefix[a + w - 1] - prefix[a - 1] >= c.k) {
          ++cover[a];
          --cover[a + w];
        }
    }
    int running = 0;
    for (std::size_t s = 1; s <= H; ++s) {
      running += cover[s];
      if (running > 0)
        for (std::size_t p = from; p < n_; ++p) {
          const std::size_t t = order_[p];
          if (inst_.tasks()[t].window.contains(static_cast<Slot>(s)))
            clear_slots(node, t, static_cast<Slot>(s), static_cast<Slot>(s));
        }
    }
  }

  // How many more tasks the capacities can still admit, summed over disjoint w-blocks.
  std::size_t capacity_room(const Node &node) const {
    std::size_t room = n_;
    for (const CapacityConstraint &c : caps_) {
      std::size_t r = 0;
      for (int start = 1; start <= horizon_; start += c.w) {
        int placed = 0;
        for (int s = start; s < start + c.w && s <= horizon_; ++s)
          placed += node.per_slot[static_cast<std::size_t>(s)];
        r += static_cast<std::size_t>(std::max(0, c.k - placed));
      }
      room = std::min(room, r);
    }
    return room;
  }

  double bound_rest(const Node &node, std::size_t depth) const {
    std::size_t room = capacity_room(node);
    double extra = 0.0;
    for (std::size_t p = depth; p < n_ && room > 0; ++p) {
      const std::size_t t = order_[p];
      if (!domain_empty(node, t)) {
        extra += inst_.tasks()[t].weight;
        --room;
      }
    }
    return extra;
  }

  void place(Node &node, std::size_t depth, std::size_t t, Slot s) const {
    node.slots[t] = s;
    ++node.per_slot[static_cast<std::size_t>(s)];
    for (const auto &[partner, delta] : sep_[t])
      if (position_[partner] > depth)
        clear_slots(node, partner, s - delta + 1, s + delta - 1);
    propagate_caps(node, depth + 1);
  }

  void dfs(std::size_t depth, double value, Node &node) {
    if (aborted_)
      return;
    if ((++nodes_ & 1023) == 0 && seconds_since(start_) > time_limit_) {
      aborted_ = true;
      return;
    }
    if (value > best_value_ + kValueTolerance) {
      best_value_ = value;
      best_ = Assignment(node.slots);
    }
    if (depth == n_)
      return;
    if (value + bound_rest(node, depth) <= best_value_ + kValueTolerance)
      return;

    const std::size_t t = order_[depth];
    const Task &task = inst_.tasks()[t];
    for (Slot s = task.window.lo; s <= task.window.hi; ++s) {
      if (!has_slot(node, t, s))
        continue;
      Node child = node;
      place(child, depth, t, s);
      dfs(depth + 1, value + task.weight, child);
      if (aborted_)
        return;
    }
    node.slots[t] = kUnscheduled;
    dfs(depth + 1, value, node);
  }

  const Instance &inst_;
  std::size_t n_;
  int horizon_;
  double time_limit_;

  std::vector<std::size_t> offset_;
  std::size_t words_{0};
  std::vector<std::vector<std::pair<std::size_t, int>>> sep_;
  std::vector<CapacityConstraint> caps_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;

  Clock::time_point start_;
  std::int64_t nodes_{0};
  bool aborted_{false};
  Assignment best_;
  double best_value_{0.0};
};

} // namespace

SolveResult solve(const Instance &inst, const ConstraintSet &constraints, double time_limit,
                  std::uint64_t /*seed*/) {
  if (!(time_limit > 0.0))
    throw ValidationError("time limit must be positive");
  return BranchAndBound(inst, constraints, time_limit).run();
}

SolveResult brute_force(const Instance &inst, const ConstraintSet &constraints,
                        std::uint64_t enumeration_cap) {
  const auto start = Clock::now();
  std::uint64_t total = 1;
  for (const Task &t : inst.tasks()) {
    const auto options = static_cast<std::uint64_t>(t.window.length()) + 1;
    if (total > enumeration_cap / options)
      throw EnumerationLimitError("brute force would enumerate more than " +
                                  std::to_string(enumeration_cap) + " assignments");
    total *= options;
  }

  const std::size_t n = inst.size();
  Assignment current(n);
  SolveResult r;
  r.assignment = current;
  r.proven_optimal = true;
  // Odometer over {0} ∪ W_j, task 1 least significant.
  while (true) {
    ++r.nodes_explored;
    if (is_feasible(constraints, current)) {
      const double v = objective_value(inst, current);
      if (v > r.value + kValueTolerance) {
        r.value = v;
        r.assignment = current;
      }
    }
    std::size_t idx = 0;
    for (; idx < n; ++idx) {
      const Task &t = inst.tasks()[idx];
      const Slot s = current[t.id];
      if (s == kUnscheduled) {
        current.set(t.id, t.window.lo);
        break;
      }
      if (s < t.window.hi) {
        current.set(t.id, s + 1);
        break;
      }
      current.set(t.id, kUnscheduled);
    }
    if (idx == n)
      break;
  }
  r.elapsed = seconds_since(start);
  return r;
}

} // namespace eosp
