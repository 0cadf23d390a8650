#include "eosp/cca.hpp"

#include <algorithm>
#include <cstdlib>

namespace eosp {

std::vector<TaskPair> violated_pairs(const Assignment &e, const CandidateBasis &b) {
  std::vector<std::pair<int, TaskPair>> hits;
  for (const auto &[pair, ds] : b.separations()) {
    if (ds.empty() || !e.scheduled(pair.first) || !e.scheduled(pair.second))
      continue;
    if (std::abs(e[pair.first] - e[pair.second]) < ds.back())
      hits.emplace_back(ds.back(), pair);
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  std::vector<TaskPair> out;
  out.reserve(hits.size());
  for (const auto &h : hits)
    out.push_back(h.second);
  return out;
}

bool pair_probe(TaskId i, TaskId j, Slot s_i, Slot s_j, HiddenOracle &oracle) {
  Assignment e(oracle.instance().size());
  e.set(i, s_i);
  e.set(j, s_j);
  return oracle.ask(e, QueryKind::Partial);
}

std::optional<std::pair<Slot, Slot>> witness_slots(TaskId i, TaskId j, int delta,
                                                   const Instance &inst) {
  const Window &wi = inst.task(i).window;
  const Window &wj = inst.task(j).window;
  if (min_window_gap(wi, wj) >= delta)
    return std::nullopt;
  // Achievable gaps form the contiguous range [min_gap, max_gap].
  const int target = std::min(delta - 1, max_window_gap(wi, wj));
  for (Slot si = wi.lo; si <= wi.hi; ++si)
    for (Slot sj : {si - target, si + target})
      if (wj.contains(sj))
        return std::pair{si, sj};
  return std::nullopt;
}

GapSearchResult justified_gap_search(TaskId i, TaskId j, const CandidateBasis &b,
                                     const Instance &inst, HiddenOracle &oracle) {
  GapSearchResult out;
  const std::vector<int> ds = b.deltas(i, j);
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(ds.size()) - 1;
  while (lo <= hi) {
    const std::ptrdiff_t mid = lo + (hi - lo) / 2;
    const int delta = ds[static_cast<std::size_t>(mid)];
    const auto slots = witness_slots(i, j, delta, inst);
    if (!slots) {
      // Cannot be violated inside the windows, and neither can anything smaller.
      lo = mid + 1;
      continue;
    }
    Probe p{i, j, slots->first, slots->second, false, delta};
    p.accepted = pair_probe(i, j, p.slot_i, p.slot_j, oracle);
    out.probes.push_back(p);
    if (!p.accepted) {
      out.delta_star = delta;
      out.witness = p;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return out;
}

CapacityConstraint capacity_fallback(const Assignment &e, const CandidateBasis &b) {
  std::optional<CapacityConstraint> best;
  for (const CapacityConstraint &c : b.capacities()) {
    if (satisfies_cap(c, e))
      continue;
    if (!best || c.w < best->w || (c.w == best->w && c.k > best->k))
      best = c;
  }
  if (!best)
    throw AcquisitionStuck("rejected schedule " + to_string(e) +
                           " violates no remaining capacity candidate and no separation was "
                           "justified");
  return *best;
}

void add_learned(ConstraintSet &learned, const Constraint &c) {
  std::erase_if(learned, [&](const Constraint &old) { return dominates(c, old); });
  learned.insert(c);
}

AcquisitionOutcome acquire(const Assignment &e, ConstraintSet &learned, CandidateBasis &basis,
                           const Instance &inst, HiddenOracle &oracle) {
  const std::int64_t partial_before = oracle.stats().partial_queries;
  AcquisitionOutcome out;

  auto finish = [&](Constraint c, AcquisitionKind kind) {
    add_learned(learned, c);
    out.learned = c;
    out.kind = kind;
    out.partial_queries_used = oracle.stats().partial_queries - partial_before;
    out.basis_size_after = basis.size();
    return out;
  };

  for (const auto &[i, j] : violated_pairs(e, basis)) {
    PairSearch rec;
    rec.pair = {i, j};
    rec.candidates = basis.deltas(i, j).size();
    GapSearchResult found = justified_gap_search(i, j, basis, inst, oracle);
    rec.search_probes = found.probes.size();
    out.probes.insert(out.probes.end(), found.probes.begin(), found.probes.end());
    rec.delta_star = found.delta_star;

    if (found.delta_star) {
      const int own_gap = std::abs(e[i] - e[j]);
      if (found.witness->gap() < own_gap) {
        rec.gate_probed = true;
        Probe gate{i, j, e[i], e[j], false, std::nullopt};
        gate.accepted = pair_probe(i, j, e[i], e[j], oracle);
        out.probes.push_back(gate);
        if (gate.accepted)
          rec.delta_star.reset();
      }
    }
    out.searches.push_back(rec);
    if (rec.delta_star) {
      basis.remove_sep_upto(i, j, *rec.delta_star);
      return finish(make_sep(i, j, *rec.delta_star), AcquisitionKind::SepLearned);
    }
  }

  const CapacityConstraint cap = capacity_fallback(e, basis);
  basis.remove_cap_dominated(cap.k, cap.w);
  return finish(cap, AcquisitionKind::CapFallback);
}

} // namespace eosp
