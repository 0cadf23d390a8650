#ifndef EOSP_GENERATOR_HPP
#define EOSP_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "eosp/basis.hpp"

namespace eosp {

struct GenConfig {
  int n{10};
  std::uint64_t seed{0};
  int horizon_factor{3};
  double weight_lo{0.5};
  double weight_hi{2.0};
  double sep_pair_fraction{0.30};
  std::vector<int> sep_delta_choices{2, 3, 4, 5};
  int window_len_lo{2};
  int window_len_hi{6};
  /// Defaults: default_cap_k(n) and floor(H / 5).
  std::optional<int> cap_k;
  std::optional<int> cap_w;

  int horizon() const { return horizon_factor * n; }
  void validate() const;
};

struct GeneratedInstance {
  Instance instance;
  ConstraintSet hidden;
  LanguageConfig language;
  /// Hidden separations that some window-consistent pair of slots can violate.
  std::size_t non_vacuous_seps{0};
};

/// Hidden capacity limit per task count: 2, 2, 4, 5, 6 at n = 10..50, linear
/// in between (rounded), 2 below, slope 0.1 per task beyond 50.
int default_cap_k(int n);

/// Deterministic in cfg. Weights, windows, sep pairs and deltas come from
/// separate substreams of the seed.
GeneratedInstance generate(const GenConfig &cfg);

} // namespace eosp

#endif
