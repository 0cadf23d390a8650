#include "eosp/learn_optimize.hpp"

#include <chrono>
#include <cmath>

namespace eosp {

std::string to_string(StopReason r) {
  switch (r) {
  case StopReason::AcceptedOpt:
    return "AcceptedOpt";
  case StopReason::BasisExhausted:
    return "BasisExhausted";
  case StopReason::ModelConverged:
    return "ModelConverged";
  case StopReason::QueryCutoff:
    return "QueryCutoff";
  case StopReason::AcquisitionStuck:
    return "AcquisitionStuck";
  }
  return "Unknown";
}

Assignment init_seed_schedule(const Instance &inst, HiddenOracle &oracle) {
  if (inst.size() == 0)
    throw ValidationError("instance has no tasks");
  const Task *top = &inst.tasks().front();
  for (const Task &t : inst.tasks())
    if (t.weight > top->weight)
      top = &t;
  Assignment seed(inst.size());
  seed.set(top->id, top->window.lo);
  if (!oracle.ask(seed, QueryKind::Main))
    throw ValidationError("oracle rejects the single-task schedule " + to_string(seed) +
                          "; hidden model is malformed");
  return seed;
}

LoResult learn_optimize(const Instance &inst, HiddenOracle &oracle, const LoConfig &cfg) {
  if (cfg.query_cutoff < 1)
    throw ValidationError("query cutoff must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const OracleStats stats_before = oracle.stats();

  LoResult out;
  RunTrace &trace = out.trace;

  trace.seed_schedule = init_seed_schedule(inst, oracle);
  trace.seed_value = objective_value(inst, trace.seed_schedule);
  CandidateBasis basis = CandidateBasis::instantiate(cfg.language, inst, trace.seed_schedule);
  trace.basis_initial_size = basis.size();
  basis.prune_vacuous(inst);
  trace.basis_after_vacuous = basis.size();

  ConstraintSet learned;
  Assignment best = trace.seed_schedule;
  double best_value = trace.seed_value;
  bool stopped = false;

  for (int q = 1; q <= cfg.query_cutoff && !stopped; ++q) {
    IterationRecord rec;
    rec.q = q;
    const SolveResult proposal = solve(inst, learned, cfg.t_iter, cfg.seed);
    rec.proposal = proposal.assignment;
    rec.v_L = proposal.value;
    rec.proven_L = proposal.proven_optimal;
    rec.accepted = oracle.ask(proposal.assignment, QueryKind::Main);
    ++trace.loop_main_queries;

    if (rec.accepted) {
      if (proposal.value >= best_value) {
        best = proposal.assignment;
        best_value = proposal.value;
      }
      basis.retain_consistent(proposal.assignment);
      trace.stop_reason = StopReason::AcceptedOpt;
      stopped = true;
    } else {
      try {
        rec.acquisition = acquire(proposal.assignment, learned, basis, inst, oracle);
      } catch (const AcquisitionStuck &) {
        trace.stop_reason = StopReason::AcquisitionStuck;
        stopped = true;
      }
      if (!stopped && basis.empty()) {
        trace.stop_reason = StopReason::BasisExhausted;
        stopped = true;
      }
      if (!stopped) {
        ConstraintSet tightened = learned;
        for (const Constraint &c : basis.strongest())
          tightened.insert(c);
        const SolveResult lub = solve(inst, tightened, cfg.t_iter, cfg.seed);
        rec.v_LuB = lub.value;
        rec.proven_LuB = lub.proven_optimal;
        if (proposal.proven_optimal && lub.proven_optimal &&
            std::abs(proposal.value - lub.value) <= kValueTolerance) {
          trace.stop_reason = StopReason::ModelConverged;
          stopped = true;
        }
      }
    }
    rec.best_value_so_far = best_value;
    trace.iterations.push_back(std::move(rec));
  }
  if (!stopped)
    trace.stop_reason = StopReason::QueryCutoff;

  const SolveResult refined = solve(inst, learned, cfg.t_final, cfg.seed);
  if (refined.value > best_value + kValueTolerance) {
    trace.final_solve_checked = true;
    if (oracle.ask(refined.assignment, QueryKind::Main)) {
      trace.final_solve_adopted = true;
      best = refined.assignment;
      best_value = refined.value;
    }
  }

  // First iteration reaching the final best value.
  if (best_value <= trace.seed_value + kValueTolerance) {
    trace.q_star = 0;
  } else {
    trace.q_star = static_cast<int>(trace.iterations.size()) + 1;
    for (const IterationRecord &rec : trace.iterations)
      if (rec.best_value_so_far >= best_value - kValueTolerance) {
        trace.q_star = rec.q;
        break;
      }
  }

  const OracleStats stats_after = oracle.stats();
  trace.main_queries = stats_after.main_queries - stats_before.main_queries;
  trace.partial_queries = stats_after.partial_queries - stats_before.partial_queries;
  trace.learned_final = learned;
  trace.basis_final = std::move(basis);
  trace.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.best = std::move(best);
  out.best_value = best_value;
  return out;
}

} // namespace eosp
