#include <doctest.h>

#include "fixtures.hpp"

using namespace eosp;
using namespace eosp::fixtures;

TEST_CASE("instance validation") {
  CHECK_NOTHROW(worked_example());
  CHECK_THROWS_AS(Instance(10, {Task{1, 0.0, Window{1, 2}}}), ValidationError);
  CHECK_THROWS_AS(Instance(10, {Task{1, 1.0, Window{9, 11}}}), ValidationError);
  CHECK_THROWS_AS(Instance(10, {Task{2, 1.0, Window{1, 2}}}), ValidationError);
  CHECK_THROWS_AS(Instance(10, {Task{1, 1.0, Window{4, 3}}}), ValidationError);
  CHECK_THROWS_AS(Instance(0, {}), ValidationError);
}

TEST_CASE("objective_value") {
  const Instance inst = worked_example();
  CHECK(objective_value(inst, slots({3, 4, 7})) == 7.0);
  CHECK(objective_value(inst, slots({2, 0, 7})) == 5.0);
  CHECK(objective_value(inst, Assignment::empty_for(inst)) == 0.0);
  CHECK_THROWS_AS(objective_value(inst, slots({1, 0, 0})), ValidationError);
  CHECK_THROWS_AS(objective_value(inst, slots({2, 0})), ValidationError);
}

TEST_CASE("satisfies_sep") {
  const SeparationConstraint ab = make_sep(A, B, 3);
  CHECK_FALSE(satisfies_sep(ab, slots({3, 4, 7})));
  CHECK(satisfies_sep(ab, slots({3, 0, 7})));
  CHECK(satisfies_sep(ab, slots({2, 5, 0})));
}

TEST_CASE("make_sep canonicalizes and validates") {
  CHECK(make_sep(3, 1, 2) == SeparationConstraint{1, 3, 2});
  CHECK_THROWS_AS(make_sep(2, 2, 3), ValidationError);
  CHECK_THROWS_AS(make_sep(1, 2, 0), ValidationError);
  CHECK_THROWS_AS(make_cap(-1, 3), ValidationError);
  CHECK_THROWS_AS(make_cap(1, 0), ValidationError);
}

TEST_CASE("satisfies_cap") {
  const CapacityConstraint c15 = make_cap(1, 5);
  CHECK_FALSE(satisfies_cap(c15, slots({2, 5, 0})));
  CHECK(satisfies_cap(c15, slots({2, 0, 7})));
  // k equal to the task count never binds.
  CHECK(satisfies_cap(make_cap(3, 10), slots({4, 4, 7})));
  // Two tasks on the same slot.
  CHECK_FALSE(satisfies_cap(make_cap(1, 1), slots({4, 4, 0})));
  // k = 0 forbids any scheduled task.
  CHECK_FALSE(satisfies_cap(make_cap(0, 1), slots({0, 0, 7})));
  CHECK(satisfies_cap(make_cap(0, 1), slots({0, 0, 0})));
}

TEST_CASE("satisfies_cap matches sliding windows over 1..H") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int H = std::uniform_int_distribution<int>(1, 12)(rng);
    const Instance inst = random_instance(rng, 4, H, H);
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    const int w = std::uniform_int_distribution<int>(1, H)(rng);
    Assignment e(inst.size());
    for (const Task &t : inst.tasks())
      if (rng() % 3 != 0)
        e.set(t.id, std::uniform_int_distribution<int>(t.window.lo, t.window.hi)(rng));
    bool ok = true;
    for (int start = 1; start <= H - w + 1; ++start) {
      int count = 0;
      for (const Task &t : inst.tasks())
        if (e[t.id] >= start && e[t.id] <= start + w - 1)
          ++count;
      ok = ok && count <= k;
    }
    CHECK(satisfies_cap(make_cap(k, w), e) == ok);
  }
}

TEST_CASE("is_feasible") {
  const ConstraintSet T = worked_example_hidden();
  CHECK(is_feasible(T, slots({2, 0, 7})));
  CHECK_FALSE(is_feasible(T, slots({3, 4, 7})));
  CHECK(is_feasible({}, slots({3, 4, 7})));
}

TEST_CASE("dominates") {
  CHECK(dominates(make_sep(A, B, 4), make_sep(A, B, 3)));
  CHECK_FALSE(dominates(make_sep(A, B, 3), make_sep(A, B, 4)));
  CHECK_FALSE(dominates(make_sep(A, B, 3), make_sep(A, C, 3)));
  CHECK(dominates(make_cap(1, 5), make_cap(2, 3)));
  CHECK_FALSE(dominates(make_cap(2, 3), make_cap(1, 5)));
  CHECK_FALSE(dominates(make_cap(1, 5), make_sep(A, B, 2)));
}

TEST_CASE("cap(1,5) implies cap(2,3) on a 10-slot toy instance by enumeration") {
  const Instance toy(10, {Task{1, 1.0, Window{1, 10}}, Task{2, 1.0, Window{1, 10}}, Task{3, 1.0, Window{1, 10}}});
  bool implied = true;
  bool converse = true;
  for_each_assignment(toy, [&](const Assignment &e) {
    if (satisfies_cap(make_cap(1, 5), e) && !satisfies_cap(make_cap(2, 3), e))
      implied = false;
    if (satisfies_cap(make_cap(2, 3), e) && !satisfies_cap(make_cap(1, 5), e))
      converse = false;
  });
  CHECK(implied);
  CHECK_FALSE(converse);
}

TEST_CASE("objective is monotone in scheduled tasks") {
  const Instance inst = worked_example();
  CHECK(objective_value(inst, slots({2, 0, 0})) <= objective_value(inst, slots({2, 0, 7})));
  CHECK(objective_value(inst, slots({0, 0, 7})) <= objective_value(inst, slots({0, 5, 7})));
}
