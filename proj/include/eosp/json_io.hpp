#ifndef EOSP_JSON_IO_HPP
#define EOSP_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "eosp/baselines.hpp"
#include "eosp/basis.hpp"
#include "eosp/experiment.hpp"
#include "eosp/learn_optimize.hpp"
#include "eosp/oracle.hpp"
#include "eosp/solver.hpp"

namespace eosp {

using json = nlohmann::json;

// Instance: {"horizon": H, "tasks": [{"id", "weight", "window": [lo, hi]}, ...]}
void to_json(json &j, const Instance &inst);
void from_json(const json &j, Instance &inst);

// {"type": "sep", "i", "j", "delta"} | {"type": "cap", "k", "w"}
void to_json(json &j, const Constraint &c);
void from_json(const json &j, Constraint &c);

/// Assignment as {"slots": [x_1, ..., x_n]}.
void to_json(json &j, const Assignment &e);
void from_json(const json &j, Assignment &e);

void to_json(json &j, const LanguageConfig &lang);
void from_json(const json &j, LanguageConfig &lang);

/// {"main", "partial", "yes", "no"}
void to_json(json &j, const OracleStats &s);

/// {"sep": [{"i", "j", "deltas": [...]}], "cap": [[k, w], ...]}
void to_json(json &j, const CandidateBasis &b);

void to_json(json &j, const SolveResult &r);
void to_json(json &j, const Probe &p);
void to_json(json &j, const AcquisitionOutcome &a);
/// One JSONL trace line.
void to_json(json &j, const IterationRecord &r);
void to_json(json &j, const BaselineResult &r);

/// Hidden-model file: {"constraints": [...]}; a bare array is accepted on read.
json constraints_to_json(const ConstraintSet &set);
ConstraintSet constraints_from_json(const json &j);

/// {stop_reason, best_value, q_star, main, partial, wall_time, ...}
json run_summary(const LoResult &r);

/// Experiment config file. Relative case paths resolve against base_dir.
/// Keys: n_values, seeds, q_cutoff, fao_budget, t_iter, t_final, t_reference,
/// methods, jobs, timing, fao_proposals ("solve" | "random"), generator {...},
/// cases [{"instance", "hidden", "language"}], full_scale.
ExperimentConfig experiment_config_from_json(const json &j, const std::filesystem::path &base_dir);

json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const json &j);
/// Per-iteration JSONL trace.
void write_trace_jsonl(const std::filesystem::path &path, const RunTrace &trace);

} // namespace eosp

#endif
