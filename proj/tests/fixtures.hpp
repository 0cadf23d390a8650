#ifndef EOSP_TESTS_FIXTURES_HPP
#define EOSP_TESTS_FIXTURES_HPP

#include <random>

#include "eosp/basis.hpp"
#include "eosp/model.hpp"

namespace eosp::fixtures {

inline constexpr TaskId A = 1;
inline constexpr TaskId B = 2;
inline constexpr TaskId C = 3;

/// Three-task worked example: A(3) W={2,3,4}, B(2) W={3,4,5}, C(2) W={7,8}, H=10.
inline Instance worked_example() {
  return Instance(10, {Task{A, 3.0, Window{2, 4}}, Task{B, 2.0, Window{3, 5}}, Task{C, 2.0, Window{7, 8}}});
}

/// Hidden model of the worked example: sep(A,B,3) and cap(1,5).
inline ConstraintSet worked_example_hidden() {
  return ConstraintSet{make_sep(A, B, 3), make_cap(1, 5)};
}

/// delta in {2,3,4}; cap k in {1,2}, w in {3,4,5}.
inline LanguageConfig worked_example_language() {
  LanguageConfig lang;
  lang.sep_delta_min = 2;
  lang.sep_delta_max = 4;
  lang.cap_candidates = std::vector<CapacityConstraint>{{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  return lang;
}

/// Three ground targets: A(10) at slot 5, B(8) at slot 6, C(4) in 18..22.
inline Instance running_example() {
  return Instance(30, {Task{A, 10.0, Window{5, 5}}, Task{B, 8.0, Window{6, 6}}, Task{C, 4.0, Window{18, 22}}});
}

inline Assignment slots(std::initializer_list<Slot> s) { return Assignment(std::vector<Slot>(s)); }

/// Small random instance for property checks.
inline Instance random_instance(std::mt19937_64 &rng, int n, int horizon, int max_len) {
  std::vector<Task> tasks;
  for (int id = 1; id <= n; ++id) {
    const int len = std::uniform_int_distribution<int>(1, std::min(max_len, horizon))(rng);
    const int lo = std::uniform_int_distribution<int>(1, horizon - len + 1)(rng);
    const double w = std::uniform_int_distribution<int>(1, 9)(rng) * 0.5;
    tasks.push_back(Task{id, w, Window{lo, lo + len - 1}});
  }
  return Instance(horizon, std::move(tasks));
}

/// Random constraint set drawn from sep delta 1..6 and cap k 0..3, w 1..H.
inline ConstraintSet random_constraints(std::mt19937_64 &rng, const Instance &inst, double sep_prob,
                                        int caps) {
  ConstraintSet out;
  const auto n = static_cast<TaskId>(inst.size());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (TaskId i = 1; i <= n; ++i)
    for (TaskId j = i + 1; j <= n; ++j)
      if (u(rng) < sep_prob)
        out.insert(make_sep(i, j, std::uniform_int_distribution<int>(1, 6)(rng)));
  for (int c = 0; c < caps; ++c)
    out.insert(make_cap(std::uniform_int_distribution<int>(1, 3)(rng),
                        std::uniform_int_distribution<int>(1, inst.horizon())(rng)));
  return out;
}

/// Every assignment of the instance, in odometer order.
template <typename F> void for_each_assignment(const Instance &inst, F &&f) {
  Assignment e(inst.size());
  while (true) {
    f(e);
    std::size_t idx = 0;
    for (; idx < inst.size(); ++idx) {
      const Task &t = inst.tasks()[idx];
      if (e[t.id] == kUnscheduled) {
        e.set(t.id, t.window.lo);
        break;
      }
      if (e[t.id] < t.window.hi) {
        e.set(t.id, e[t.id] + 1);
        break;
      }
      e.set(t.id, kUnscheduled);
    }
    if (idx == inst.size())
      return;
  }
}

} // namespace eosp::fixtures

#endif
