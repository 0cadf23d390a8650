#include "eosp/generator.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "eosp/rng.hpp"

namespace eosp {

void GenConfig::validate() const {
  if (n < 1)
    throw ValidationError("n must be >= 1");
  if (horizon_factor < 1)
    throw ValidationError("horizon_factor must be >= 1");
  if (!(weight_lo > 0.0) || weight_hi < weight_lo)
    throw ValidationError("weights need 0 < weight_lo <= weight_hi");
  if (sep_pair_fraction < 0.0 || sep_pair_fraction > 1.0)
    throw ValidationError("sep_pair_fraction must lie in [0, 1]");
  if (sep_delta_choices.empty())
    throw ValidationError("sep_delta_choices is empty");
  for (int d : sep_delta_choices)
    if (d < 1)
      throw ValidationError("separation deltas must be >= 1");
  if (window_len_lo < 1 || window_len_hi < window_len_lo || window_len_lo > horizon())
    throw ValidationError("window lengths must satisfy 1 <= lo <= hi and lo <= H");
  if (cap_k && *cap_k < 0)
    throw ValidationError("cap_k must be >= 0");
  if (cap_w && (*cap_w < 1 || *cap_w > horizon()))
    throw ValidationError("cap_w must lie in 1..H");
}

int default_cap_k(int n) {
  if (n < 1)
    throw ValidationError("n must be >= 1");
  static constexpr std::array<int, 5> table{2, 2, 4, 5, 6};
  if (n <= 10)
    return table[0];
  if (n >= 50)
    return std::max(1, static_cast<int>(std::lround(6.0 + 0.1 * (n - 50))));
  const int idx = (n - 10) / 10;
  const double frac = (n - 10 - 10 * idx) / 10.0;
  const double k = table[static_cast<std::size_t>(idx)] +
                   frac * (table[static_cast<std::size_t>(idx) + 1] - table[static_cast<std::size_t>(idx)]);
  return std::max(1, static_cast<int>(std::lround(k)));
}

GeneratedInstance generate(const GenConfig &cfg) {
  cfg.validate();
  const int H = cfg.horizon();

  Rng weights = substream(cfg.seed, Stream::Weights);
  Rng windows = substream(cfg.seed, Stream::Windows);
  Rng pairs = substream(cfg.seed, Stream::Pairs);
  Rng deltas = substream(cfg.seed, Stream::Deltas);

  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(cfg.n));
  for (int id = 1; id <= cfg.n; ++id) {
    Task t;
    t.id = id;
    t.weight = weights.uniform_real(cfg.weight_lo, cfg.weight_hi);
    const int len = std::min(H, static_cast<int>(windows.uniform_int(cfg.window_len_lo, cfg.window_len_hi)));
    const int lo = static_cast<int>(windows.uniform_int(1, H - len + 1));
    t.window = Window{lo, lo + len - 1};
    tasks.push_back(t);
  }

  GeneratedInstance g;
  g.instance = Instance(H, std::move(tasks));

  // Uniform subset of floor(fraction * n(n-1)/2) pairs via partial Fisher-Yates.
  std::vector<TaskPair> all;
  for (TaskId i = 1; i <= cfg.n; ++i)
    for (TaskId j = i + 1; j <= cfg.n; ++j)
      all.emplace_back(i, j);
  const auto count = static_cast<std::size_t>(
      std::floor(cfg.sep_pair_fraction * static_cast<double>(all.size()) + 1e-9));
  for (std::size_t k = 0; k < count; ++k) {
    const auto pick = static_cast<std::size_t>(
        pairs.uniform_int(static_cast<std::int64_t>(k), static_cast<std::int64_t>(all.size() - 1)));
    std::swap(all[k], all[pick]);
  }
  std::vector<TaskPair> chosen(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(chosen.begin(), chosen.end());

  for (const auto &[i, j] : chosen) {
    const auto idx = static_cast<std::size_t>(
        deltas.uniform_int(0, static_cast<std::int64_t>(cfg.sep_delta_choices.size()) - 1));
    const int delta = cfg.sep_delta_choices[idx];
    g.hidden.insert(make_sep(i, j, delta));
    if (min_window_gap(g.instance.task(i).window, g.instance.task(j).window) < delta)
      ++g.non_vacuous_seps;
  }

  const int k = cfg.cap_k.value_or(default_cap_k(cfg.n));
  const int w = cfg.cap_w.value_or(std::max(1, H / 5));
  g.hidden.insert(make_cap(k, w));

  g.language.sep_delta_min = 2;
  g.language.sep_delta_max = 10;
  g.language.cap_center_k = k;
  g.language.cap_center_w = w;
  g.language.cap_radius = 2;
  return g;
}

} // namespace eosp
