#include "eosp/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace eosp {

void to_json(json &j, const Instance &inst) {
  json tasks = json::array();
  for (const Task &t : inst.tasks())
    tasks.push_back({{"id", t.id}, {"weight", t.weight}, {"window", {t.window.lo, t.window.hi}}});
  j = json{{"horizon", inst.horizon()}, {"tasks", std::move(tasks)}};
}

void from_json(const json &j, Instance &inst) {
  try {
    std::vector<Task> tasks;
    for (const json &t : j.at("tasks")) {
      const json &w = t.at("window");
      if (!w.is_array() || w.size() != 2)
        throw ValidationError("task window must be [lo, hi]");
      tasks.push_back(Task{t.at("id").get<TaskId>(), t.at("weight").get<double>(),
                           Window{w[0].get<Slot>(), w[1].get<Slot>()}});
    }
    std::sort(tasks.begin(), tasks.end(), [](const Task &a, const Task &b) { return a.id < b.id; });
    inst = Instance(j.at("horizon").get<int>(), std::move(tasks));
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed instance JSON: ") + e.what());
  }
}

void to_json(json &j, const Constraint &c) {
  if (const auto *s = std::get_if<SeparationConstraint>(&c))
    j = json{{"type", "sep"}, {"i", s->i}, {"j", s->j}, {"delta", s->delta}};
  else {
    const auto &cap = std::get<CapacityConstraint>(c);
    j = json{{"type", "cap"}, {"k", cap.k}, {"w", cap.w}};
  }
}

void from_json(const json &j, Constraint &c) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "sep")
      c = make_sep(j.at("i").get<TaskId>(), j.at("j").get<TaskId>(), j.at("delta").get<int>());
    else if (type == "cap")
      c = make_cap(j.at("k").get<int>(), j.at("w").get<int>());
    else
      throw ValidationError("unknown constraint type '" + type + "'");
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed constraint JSON: ") + e.what());
  }
}

void to_json(json &j, const Assignment &e) {
  j = json{{"slots", std::vector<Slot>(e.slots().begin(), e.slots().end())}};
}

void from_json(const json &j, Assignment &e) {
  const json &slots = j.is_array() ? j : j.at("slots");
  e = Assignment(slots.get<std::vector<Slot>>());
}

void to_json(json &j, const LanguageConfig &lang) {
  j = json{{"sep_delta_min", lang.sep_delta_min},
           {"sep_delta_max", lang.sep_delta_max},
           {"cap_center_k", lang.cap_center_k},
           {"cap_center_w", lang.cap_center_w},
           {"cap_radius", lang.cap_radius}};
  if (lang.cap_candidates) {
    json caps = json::array();
    for (const CapacityConstraint &c : *lang.cap_candidates)
      caps.push_back({c.k, c.w});
    j["cap_candidates"] = std::move(caps);
  }
}

void from_json(const json &j, LanguageConfig &lang) {
  lang = LanguageConfig{};
  lang.sep_delta_min = j.value("sep_delta_min", lang.sep_delta_min);
  lang.sep_delta_max = j.value("sep_delta_max", lang.sep_delta_max);
  lang.cap_center_k = j.value("cap_center_k", lang.cap_center_k);
  lang.cap_center_w = j.value("cap_center_w", lang.cap_center_w);
  lang.cap_radius = j.value("cap_radius", lang.cap_radius);
  if (j.contains("cap_candidates")) {
    std::vector<CapacityConstraint> caps;
    for (const json &c : j.at("cap_candidates"))
      caps.push_back(make_cap(c.at(0).get<int>(), c.at(1).get<int>()));
    lang.cap_candidates = std::move(caps);
  }
  lang.validate();
}

void to_json(json &j, const OracleStats &s) {
  j = json{{"main", s.main_queries}, {"partial", s.partial_queries}, {"yes", s.yes_count}, {"no", s.no_count}};
}

void to_json(json &j, const CandidateBasis &b) {
  json sep = json::array();
  for (const auto &[pair, ds] : b.separations())
    sep.push_back({{"i", pair.first}, {"j", pair.second}, {"deltas", ds}});
  json cap = json::array();
  for (const CapacityConstraint &c : b.capacities())
    cap.push_back({c.k, c.w});
  j = json{{"sep", std::move(sep)}, {"cap", std::move(cap)}};
}

void to_json(json &j, const SolveResult &r) {
  j = json{{"assignment", r.assignment},
           {"value", r.value},
           {"proven_optimal", r.proven_optimal},
           {"elapsed", r.elapsed},
           {"nodes_explored", r.nodes_explored}};
}

void to_json(json &j, const Probe &p) {
  j = json{{"slots", {{"i", p.i}, {"slot_i", p.slot_i}, {"j", p.j}, {"slot_j", p.slot_j}}},
           {"verdict", p.accepted ? "yes" : "no"},
           {"candidate", p.candidate ? json(*p.candidate) : json(nullptr)}};
}

void to_json(json &j, const AcquisitionOutcome &a) {
  j = json{{"kind", a.kind == AcquisitionKind::SepLearned ? "sep" : "cap"},
           {"learned", a.learned},
           {"probes", a.probes},
           {"partial_queries", a.partial_queries_used},
           {"basis_size_after", a.basis_size_after}};
  if (a.kind == AcquisitionKind::SepLearned) {
    const auto &s = std::get<SeparationConstraint>(a.learned);
    j["pair"] = {s.i, s.j};
  } else {
    j["cap"] = {std::get<CapacityConstraint>(a.learned).k, std::get<CapacityConstraint>(a.learned).w};
  }
}

void to_json(json &j, const IterationRecord &r) {
  j = json{{"q", r.q},
           {"proposal", r.proposal},
           {"v_L", r.v_L},
           {"proven_L", r.proven_L},
           {"verdict", r.accepted ? "yes" : "no"},
           {"learned", r.acquisition ? json(r.acquisition->learned) : json(nullptr)},
           {"acquisition", r.acquisition ? json(*r.acquisition) : json(nullptr)},
           {"v_LuB", r.v_LuB ? json(*r.v_LuB) : json(nullptr)},
           {"best_value_so_far", r.best_value_so_far}};
}

void to_json(json &j, const BaselineResult &r) {
  j = json{{"assignment", r.assignment},
           {"value", r.value},
           {"main", r.main_queries},
           {"partial", r.partial_queries},
           {"wall_time", r.wall_time},
           {"acquisition_main", r.acquisition_main_queries},
           {"repair_queries", r.repair_queries},
           {"learned", constraints_to_json(r.learned)}};
}

json constraints_to_json(const ConstraintSet &set) {
  json arr = json::array();
  for (const Constraint &c : set)
    arr.push_back(c);
  return json{{"constraints", std::move(arr)}};
}

ConstraintSet constraints_from_json(const json &j) {
  const json &arr = j.is_array() ? j : j.at("constraints");
  ConstraintSet out;
  for (const json &c : arr)
    out.insert(c.get<Constraint>());
  return out;
}

json run_summary(const LoResult &r) {
  return json{{"stop_reason", to_string(r.trace.stop_reason)},
              {"best_value", r.best_value},
              {"best", r.best},
              {"q_star", r.trace.q_star},
              {"main", r.trace.main_queries},
              {"loop_main", r.trace.loop_main_queries},
              {"partial", r.trace.partial_queries},
              {"wall_time", r.trace.wall_time},
              {"learned", constraints_to_json(r.trace.learned_final)},
              {"basis_initial", r.trace.basis_initial_size},
              {"basis_after_vacuous", r.trace.basis_after_vacuous},
              {"basis_final", r.trace.basis_final.size()}};
}

ExperimentConfig experiment_config_from_json(const json &j, const std::filesystem::path &base_dir) {
  ExperimentConfig cfg = j.value("full_scale", false) ? ExperimentConfig::full_scale() : ExperimentConfig{};
  try {
    if (j.contains("n_values"))
      cfg.n_values = j.at("n_values").get<std::vector<int>>();
    if (j.contains("seeds"))
      cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    cfg.query_cutoff = j.value("q_cutoff", cfg.query_cutoff);
    cfg.fao_budget = j.value("fao_budget", cfg.fao_budget);
    cfg.t_iter = j.value("t_iter", cfg.t_iter);
    cfg.t_final = j.value("t_final", cfg.t_final);
    cfg.t_reference = j.value("t_reference", cfg.t_reference);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.record_timing = j.value("timing", cfg.record_timing);
    if (j.contains("methods")) {
      cfg.methods.clear();
      for (const json &m : j.at("methods"))
        cfg.methods.push_back(method_from_string(m.get<std::string>()));
    }
    if (j.contains("fao_proposals")) {
      const std::string p = j.at("fao_proposals").get<std::string>();
      if (p == "solve")
        cfg.fao_proposals = FaoProposals::SolveUnderLearned;
      else if (p == "random")
        cfg.fao_proposals = FaoProposals::RandomFeasible;
      else
        throw ValidationError("fao_proposals must be \"solve\" or \"random\"");
    }
    if (j.contains("generator")) {
      const json &g = j.at("generator");
      GenConfig &gc = cfg.generator;
      gc.horizon_factor = g.value("horizon_factor", gc.horizon_factor);
      gc.weight_lo = g.value("weight_lo", gc.weight_lo);
      gc.weight_hi = g.value("weight_hi", gc.weight_hi);
      gc.sep_pair_fraction = g.value("sep_pair_fraction", gc.sep_pair_fraction);
      if (g.contains("sep_delta_choices"))
        gc.sep_delta_choices = g.at("sep_delta_choices").get<std::vector<int>>();
      gc.window_len_lo = g.value("window_len_lo", gc.window_len_lo);
      gc.window_len_hi = g.value("window_len_hi", gc.window_len_hi);
      if (g.contains("cap_k"))
        gc.cap_k = g.at("cap_k").get<int>();
      if (g.contains("cap_w"))
        gc.cap_w = g.at("cap_w").get<int>();
    }
    if (j.contains("cases")) {
      for (const json &c : j.at("cases")) {
        auto resolve = [&](const std::string &key) {
          std::filesystem::path p = c.at(key).get<std::string>();
          return p.is_absolute() ? p : base_dir / p;
        };
        ExperimentCase ec;
        ec.instance = read_json_file(resolve("instance")).get<Instance>();
        ec.hidden = constraints_from_json(read_json_file(resolve("hidden")));
        ec.language = read_json_file(resolve("language")).get<LanguageConfig>();
        cfg.fixed_cases.push_back(std::move(ec));
      }
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed experiment config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path &path, const json &j) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

void write_trace_jsonl(const std::filesystem::path &path, const RunTrace &trace) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  for (const IterationRecord &rec : trace.iterations)
    out << json(rec).dump() << '\n';
}

} // namespace eosp
