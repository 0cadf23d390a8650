#include "eosp/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "eosp/cca.hpp"
#include "eosp/rng.hpp"

namespace eosp {
namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<TaskId> by_descending_weight(const Instance &inst) {
  std::vector<TaskId> ids(inst.size());
  std::iota(ids.begin(), ids.end(), TaskId{1});
  std::stable_sort(ids.begin(), ids.end(), [&](TaskId a, TaskId b) {
    return inst.task(a).weight > inst.task(b).weight;
  });
  return ids;
}

// Random schedule satisfying `learned`: tasks in shuffled order, each tried at
// one random slot of its window and kept only if the set stays satisfied.
Assignment random_feasible(const Instance &inst, const ConstraintSet &learned, Rng &rng) {
  std::vector<TaskId> ids(inst.size());
  std::iota(ids.begin(), ids.end(), TaskId{1});
  for (std::size_t k = ids.size(); k > 1; --k)
    std::swap(ids[k - 1], ids[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(k - 1)))]);
  Assignment e(inst.size());
  for (TaskId id : ids) {
    const Window &w = inst.task(id).window;
    e.set(id, static_cast<Slot>(rng.uniform_int(w.lo, w.hi)));
    if (!is_feasible(learned, e))
      e.set(id, kUnscheduled);
  }
  return e;
}

} // namespace

std::int64_t repair_by_dropping(const Instance &inst, HiddenOracle &oracle, Assignment &e) {
  std::int64_t asked = 0;
  while (true) {
    ++asked;
    if (oracle.ask(e, QueryKind::Main))
      return asked;
    TaskId drop = 0;
    for (const Task &t : inst.tasks())
      if (e.scheduled(t.id) && (drop == 0 || t.weight < inst.task(drop).weight))
        drop = t.id;
    // The empty schedule satisfies both families, so this cannot run dry.
    if (drop == 0)
      throw ValidationError("oracle rejects the empty schedule");
    e.set(drop, kUnscheduled);
  }
}

BaselineResult priority_greedy(const Instance &inst, HiddenOracle &oracle) {
  const auto start = std::chrono::steady_clock::now();
  const OracleStats before = oracle.stats();

  Assignment e(inst.size());
  std::vector<bool> occupied(static_cast<std::size_t>(inst.horizon()) + 1, false);
  for (TaskId id : by_descending_weight(inst)) {
    const Window &w = inst.task(id).window;
    for (Slot s = w.lo; s <= w.hi; ++s)
      if (!occupied[static_cast<std::size_t>(s)]) {
        occupied[static_cast<std::size_t>(s)] = true;
        e.set(id, s);
        break;
      }
  }
  repair_by_dropping(inst, oracle, e);

  BaselineResult r;
  r.value = objective_value(inst, e);
  r.assignment = std::move(e);
  r.main_queries = oracle.stats().main_queries - before.main_queries;
  r.partial_queries = oracle.stats().partial_queries - before.partial_queries;
  r.wall_time = elapsed_since(start);
  return r;
}

BaselineResult fao(const Instance &inst, HiddenOracle &oracle, const FaoConfig &cfg) {
  if (cfg.budget < 1)
    throw ValidationError("FAO budget must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const OracleStats before = oracle.stats();
  BaselineResult r;

  // Same initial basis as learn-and-optimize, seeded by the heaviest task at
  // its earliest slot. The seed is not submitted: FAO spends exactly `budget`
  // main queries on acquisition.
  Assignment seed(inst.size());
  {
    const Task *top = &inst.tasks().front();
    for (const Task &t : inst.tasks())
      if (t.weight > top->weight)
        top = &t;
    seed.set(top->id, top->window.lo);
  }
  CandidateBasis basis = CandidateBasis::instantiate(cfg.language, inst, seed);
  basis.prune_vacuous(inst);

  ConstraintSet learned;
  std::optional<Assignment> incumbent;
  double incumbent_value = 0.0;
  Rng rng = substream(cfg.seed, Stream::FaoProposals);

  for (int q = 0; q < cfg.budget; ++q) {
    const Assignment proposal = cfg.proposals == FaoProposals::SolveUnderLearned
                                    ? solve(inst, learned, cfg.t_iter, cfg.seed).assignment
                                    : random_feasible(inst, learned, rng);
    ++r.acquisition_main_queries;
    if (oracle.ask(proposal, QueryKind::Main)) {
      const double v = objective_value(inst, proposal);
      if (!incumbent || v > incumbent_value + kValueTolerance) {
        incumbent = proposal;
        incumbent_value = v;
      }
      basis.retain_consistent(proposal);
      continue;
    }
    try {
      acquire(proposal, learned, basis, inst, oracle);
    } catch (const AcquisitionStuck &) {
      r.acquisition_stuck = true;
      break;
    }
  }

  Assignment final_schedule = solve(inst, learned, cfg.t_final, cfg.seed).assignment;
  r.repair_queries = repair_by_dropping(inst, oracle, final_schedule) - 1;
  const double final_value = objective_value(inst, final_schedule);
  if (incumbent && incumbent_value > final_value + kValueTolerance) {
    r.assignment = *incumbent;
    r.value = incumbent_value;
  } else {
    r.assignment = std::move(final_schedule);
    r.value = final_value;
  }
  r.learned = std::move(learned);
  r.main_queries = oracle.stats().main_queries - before.main_queries;
  r.partial_queries = oracle.stats().partial_queries - before.partial_queries;
  r.wall_time = elapsed_since(start);
  return r;
}

} // namespace eosp
