#include <doctest.h>

#include "eosp/generator.hpp"
#include "eosp/solver.hpp"
#include "fixtures.hpp"

using namespace eosp;
using namespace eosp::fixtures;

TEST_CASE("worked example optimum") {
  const Instance inst = worked_example();
  const SolveResult free = solve(inst, {});
  CHECK(free.value == 7.0);
  CHECK(free.proven_optimal);

  // Under the hidden model any two tasks must span >= 5 slots, so only A with
  // C (or B with C) fit: best is A + C = 5.
  const SolveResult r = solve(inst, worked_example_hidden());
  CHECK(r.value == 5.0);
  CHECK(r.proven_optimal);
  CHECK(is_feasible(worked_example_hidden(), r.assignment));
  CHECK(brute_force(inst, worked_example_hidden()).value == 5.0);
}

TEST_CASE("running example") {
  const Instance inst = running_example();
  CHECK(solve(inst, {}).value == 22.0);
  const SolveResult r = solve(inst, {make_sep(A, B, 2)});
  CHECK(r.value == 14.0);
  CHECK(r.assignment[B] == kUnscheduled);
}

TEST_CASE("empty constraint set schedules everything") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, 6, 12, 4);
    const SolveResult r = solve(inst, {});
    CHECK(r.assignment.scheduled_slots().size() == inst.size());
  }
}

TEST_CASE("cap(0, w) forbids everything") {
  const SolveResult r = solve(worked_example(), {make_cap(0, 1)});
  CHECK(r.value == 0.0);
  CHECK(r.proven_optimal);
}

TEST_CASE("branch and bound agrees with brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int H = std::uniform_int_distribution<int>(3, 10)(rng);
    const Instance inst = random_instance(rng, n, H, 4);
    const ConstraintSet cs = random_constraints(rng, inst, 0.5, static_cast<int>(rng() % 3));
    const SolveResult bf = brute_force(inst, cs);
    const SolveResult bb = solve(inst, cs, 10.0);
    CAPTURE(trial);
    CHECK(bb.proven_optimal);
    CHECK(bb.value == doctest::Approx(bf.value));
    CHECK(is_feasible(cs, bb.assignment));
    CHECK(objective_value(inst, bb.assignment) == doctest::Approx(bb.value));
  }
}

TEST_CASE("solve is deterministic") {
  GenConfig cfg;
  cfg.n = 15;
  cfg.seed = 3;
  const GeneratedInstance g = generate(cfg);
  const SolveResult a = solve(g.instance, g.hidden, 5.0);
  const SolveResult b = solve(g.instance, g.hidden, 5.0);
  CHECK(a.assignment == b.assignment);
  CHECK(a.value == b.value);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("time limit returns a feasible incumbent") {
  GenConfig cfg;
  cfg.n = 40;
  cfg.seed = 1;
  const GeneratedInstance g = generate(cfg);
  const SolveResult r = solve(g.instance, g.hidden, 1e-6);
  CHECK(is_feasible(g.hidden, r.assignment));
  CHECK(r.value >= 0.0);
}

TEST_CASE("error paths") {
  const Instance inst = worked_example();
  CHECK_THROWS_AS(solve(inst, {make_sep(1, 4, 2)}), ValidationError);
  std::vector<Task> tasks;
  for (int id = 1; id <= 10; ++id)
    tasks.push_back(Task{id, 1.0, Window{1, 10}});
  const Instance big(10, tasks);
  CHECK_THROWS_AS(brute_force(big, {}), EnumerationLimitError);
  CHECK_NOTHROW(brute_force(inst, {}, 100));
  CHECK_THROWS_AS(brute_force(inst, {}, 10), EnumerationLimitError);
}
