#include "eosp/oracle.hpp"

namespace eosp {

HiddenOracle::HiddenOracle(Instance instance, ConstraintSet truth)
    : instance_(std::move(instance)), truth_(std::move(truth)) {}

bool HiddenOracle::ask(const Assignment &e, QueryKind kind) {
  validate(instance_, e);
  const bool yes = is_feasible(truth_, e);
  if (kind == QueryKind::Main)
    ++stats_.main_queries;
  else
    ++stats_.partial_queries;
  if (yes)
    ++stats_.yes_count;
  else
    ++stats_.no_count;
  return yes;
}

} // namespace eosp
