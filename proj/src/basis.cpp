#include "eosp/basis.hpp"

#include <algorithm>
#include <cstdlib>

namespace eosp {

void LanguageConfig::validate() const {
  if (sep_delta_min < 1)
    throw ValidationError("sep_delta_min must be >= 1");
  if (sep_delta_max < sep_delta_min)
    throw ValidationError("sep_delta_max must be >= sep_delta_min");
  if (cap_radius < 0)
    throw ValidationError("cap_radius must be >= 0");
  if (cap_candidates)
    for (const CapacityConstraint &c : *cap_candidates)
      make_cap(c.k, c.w);
}

int min_window_gap(const Window &a, const Window &b) {
  if (a.hi < b.lo)
    return b.lo - a.hi;
  if (b.hi < a.lo)
    return a.lo - b.hi;
  return 0;
}

int max_window_gap(const Window &a, const Window &b) {
  return std::max(std::abs(a.hi - b.lo), std::abs(b.hi - a.lo));
}

CandidateBasis CandidateBasis::language(const LanguageConfig &lang, const Instance &inst) {
  lang.validate();
  CandidateBasis b;
  std::vector<int> all_deltas;
  for (int d = lang.sep_delta_min; d <= lang.sep_delta_max; ++d)
    all_deltas.push_back(d);

  const auto n = static_cast<TaskId>(inst.size());
  for (TaskId i = 1; i <= n; ++i)
    for (TaskId j = i + 1; j <= n; ++j) {
      b.sep_.emplace(TaskPair{i, j}, all_deltas);
      b.sep_count_ += all_deltas.size();
    }

  if (lang.cap_candidates) {
    b.cap_.insert(lang.cap_candidates->begin(), lang.cap_candidates->end());
  } else {
    const int r = lang.cap_radius;
    for (int k = std::max(0, lang.cap_center_k - r); k <= lang.cap_center_k + r; ++k)
      for (int w = std::max(1, lang.cap_center_w - r);
           w <= std::min(inst.horizon(), lang.cap_center_w + r); ++w)
        b.cap_.insert(CapacityConstraint{k, w});
  }
  return b;
}

CandidateBasis CandidateBasis::instantiate(const LanguageConfig &lang, const Instance &inst,
                                           const Assignment &seed_schedule) {
  validate(inst, seed_schedule);
  CandidateBasis b = language(lang, inst);
  b.retain_consistent(seed_schedule);
  return b;
}

void CandidateBasis::erase_empty(std::map<TaskPair, std::vector<int>>::iterator it) {
  if (it != sep_.end() && it->second.empty())
    sep_.erase(it);
}

std::size_t CandidateBasis::prune_vacuous(const Instance &inst) {
  std::size_t removed = 0;
  for (auto it = sep_.begin(); it != sep_.end();) {
    const int gap = min_window_gap(inst.task(it->first.first).window,
                                   inst.task(it->first.second).window);
    auto &ds = it->second;
    const auto keep = std::upper_bound(ds.begin(), ds.end(), gap);
    const auto dropped = static_cast<std::size_t>(keep - ds.begin());
    ds.erase(ds.begin(), keep);
    removed += dropped;
    it = ds.empty() ? sep_.erase(it) : std::next(it);
  }
  sep_count_ -= removed;
  return removed;
}

std::size_t CandidateBasis::retain_consistent(const Assignment &e) {
  std::size_t removed = 0;
  for (auto it = sep_.begin(); it != sep_.end();) {
    const Slot a = e[it->first.first];
    const Slot b = e[it->first.second];
    if (a != kUnscheduled && b != kUnscheduled) {
      const int gap = std::abs(a - b);
      auto &ds = it->second;
      const auto cut = std::upper_bound(ds.begin(), ds.end(), gap);
      removed += static_cast<std::size_t>(ds.end() - cut);
      ds.erase(cut, ds.end());
    }
    it = it->second.empty() ? sep_.erase(it) : std::next(it);
  }
  sep_count_ -= removed;
  removed += std::erase_if(cap_, [&](const CapacityConstraint &c) { return !satisfies_cap(c, e); });
  return removed;
}

std::size_t CandidateBasis::remove_sep_upto(TaskId i, TaskId j, int delta_star) {
  auto it = sep_.find(TaskPair{std::min(i, j), std::max(i, j)});
  if (it == sep_.end())
    return 0;
  auto &ds = it->second;
  const auto keep = std::upper_bound(ds.begin(), ds.end(), delta_star);
  const auto removed = static_cast<std::size_t>(keep - ds.begin());
  ds.erase(ds.begin(), keep);
  sep_count_ -= removed;
  erase_empty(it);
  return removed;
}

std::size_t CandidateBasis::remove_cap_dominated(int k, int w) {
  return std::erase_if(cap_, [&](const CapacityConstraint &c) { return c.k >= k && c.w <= w; });
}

const std::vector<int> &CandidateBasis::deltas(TaskId i, TaskId j) const {
  static const std::vector<int> none;
  const auto it = sep_.find(TaskPair{std::min(i, j), std::max(i, j)});
  return it == sep_.end() ? none : it->second;
}

bool CandidateBasis::contains(const Constraint &c) const {
  if (const auto *s = std::get_if<SeparationConstraint>(&c)) {
    const auto &ds = deltas(s->i, s->j);
    return std::binary_search(ds.begin(), ds.end(), s->delta);
  }
  return cap_.contains(std::get<CapacityConstraint>(c));
}

ConstraintSet CandidateBasis::constraints() const {
  ConstraintSet out;
  for (const auto &[pair, ds] : sep_)
    for (int d : ds)
      out.insert(SeparationConstraint{pair.first, pair.second, d});
  for (const CapacityConstraint &c : cap_)
    out.insert(c);
  return out;
}

ConstraintSet CandidateBasis::strongest() const {
  ConstraintSet out;
  for (const auto &[pair, ds] : sep_)
    out.insert(SeparationConstraint{pair.first, pair.second, ds.back()});
  for (const CapacityConstraint &c : cap_) {
    const bool dominated = std::any_of(cap_.begin(), cap_.end(), [&](const CapacityConstraint &o) {
      return o != c && dominates(Constraint{o}, Constraint{c});
    });
    if (!dominated)
      out.insert(c);
  }
  return out;
}

} // namespace eosp
