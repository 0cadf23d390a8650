#ifndef EOSP_ORACLE_HPP
#define EOSP_ORACLE_HPP

#include <cstdint>

#include "eosp/model.hpp"

namespace eosp {

enum class QueryKind { Main, Partial };

struct OracleStats {
  std::int64_t main_queries{0};
  std::int64_t partial_queries{0};
  std::int64_t yes_count{0};
  std::int64_t no_count{0};

  std::int64_t total() const { return main_queries + partial_queries; }
  bool operator==(const OracleStats &) const = default;
};

/// Yes/no feasibility oracle over a hidden constraint set. It never says which
/// constraint failed. Every call is counted; nothing is cached. Counters are
/// not synchronized: a run owns its oracle.
class HiddenOracle {
public:
  HiddenOracle(Instance instance, ConstraintSet truth);

  /// Throws ValidationError (without counting) when e leaves a task window.
  bool ask(const Assignment &e, QueryKind kind);

  OracleStats stats() const { return stats_; }
  const Instance &instance() const { return instance_; }

  /// For evaluation code only (frac, reference solve); algorithms must not call it.
  const ConstraintSet &hidden_truth() const { return truth_; }

private:
  const Instance instance_;
  const ConstraintSet truth_;
  OracleStats stats_;
};

} // namespace eosp

#endif
