#include "eosp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "eosp/json_io.hpp"

namespace eosp {

std::string to_string(Method m) {
  switch (m) {
  case Method::PG:
    return "PG";
  case Method::FAO:
    return "FAO";
  case Method::LO:
    return "LO";
  case Method::REF:
    return "REF";
  }
  return "?";
}

Method method_from_string(const std::string &s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
  if (u == "PG")
    return Method::PG;
  if (u == "FAO")
    return Method::FAO;
  if (u == "LO" || u == "L&O")
    return Method::LO;
  if (u == "REF")
    return Method::REF;
  throw ValidationError("unknown method '" + s + "' (expected pg, fao, lo or ref)");
}

ExperimentConfig ExperimentConfig::full_scale() {
  ExperimentConfig cfg;
  cfg.n_values = {10, 20, 30, 40, 50};
  cfg.t_iter = 20.0;
  cfg.t_final = 20.0;
  cfg.t_reference = 120.0;
  return cfg;
}

void ExperimentConfig::validate() const {
  if (fixed_cases.empty() && (n_values.empty() || seeds.empty()))
    throw ValidationError("experiment needs non-empty n_values and seeds");
  if (methods.empty())
    throw ValidationError("experiment needs at least one method");
  if (query_cutoff < 1 || fao_budget < 1)
    throw ValidationError("query cutoff and FAO budget must be >= 1");
  if (!(t_iter > 0.0) || !(t_final > 0.0) || !(t_reference > 0.0))
    throw ValidationError("time limits must be positive");
  if (jobs < 1)
    throw ValidationError("jobs must be >= 1");
}

double exact_frac(const ConstraintSet &learned, const ConstraintSet &hidden) {
  if (hidden.empty())
    throw ValidationError("exact_frac needs a non-empty hidden model");
  const auto hits = std::count_if(hidden.begin(), hidden.end(),
                                  [&](const Constraint &c) { return learned.contains(c); });
  return static_cast<double>(hits) / static_cast<double>(hidden.size());
}

SolveResult reference_solve(const Instance &inst, const ConstraintSet &hidden, double t_reference) {
  return solve(inst, hidden, t_reference);
}

namespace {

struct Cell {
  int n{0};
  std::uint64_t seed{0};
  ExperimentCase data;
};

double gap_pct(double ref, double value) {
  return ref > 0.0 ? (ref - value) / ref * 100.0 : 0.0;
}

std::vector<MetricsRow> run_cell(const ExperimentConfig &cfg, const Cell &cell) {
  std::vector<MetricsRow> rows;
  const Instance &inst = cell.data.instance;
  const ConstraintSet &hidden = cell.data.hidden;

  MetricsRow base;
  base.n = cell.n;
  base.seed = cell.seed;

  SolveResult ref;
  try {
    ref = reference_solve(inst, hidden, cfg.t_reference);
  } catch (const std::exception &e) {
    for (Method m : cfg.methods) {
      MetricsRow r = base;
      r.method = m;
      r.status = std::string("failed: reference: ") + e.what();
      rows.push_back(r);
    }
    return rows;
  }
  base.ref_value = ref.value;
  base.ref_proven = ref.proven_optimal;

  for (Method m : cfg.methods) {
    MetricsRow r = base;
    r.method = m;
    try {
      HiddenOracle oracle(inst, hidden);
      Assignment result;
      switch (m) {
      case Method::REF: {
        result = ref.assignment;
        r.value = ref.value;
        r.wall_time = ref.elapsed;
        break;
      }
      case Method::PG: {
        const BaselineResult b = priority_greedy(inst, oracle);
        result = b.assignment;
        r.value = b.value;
        r.main_queries = b.main_queries;
        r.partial_queries = b.partial_queries;
        r.total_main_queries = b.main_queries;
        r.wall_time = b.wall_time;
        break;
      }
      case Method::FAO: {
        FaoConfig fc;
        fc.language = cell.data.language;
        fc.budget = cfg.fao_budget;
        fc.t_iter = cfg.t_iter;
        fc.t_final = cfg.t_final;
        fc.seed = cell.seed;
        fc.proposals = cfg.fao_proposals;
        const BaselineResult b = fao(inst, oracle, fc);
        result = b.assignment;
        r.value = b.value;
        r.main_queries = b.acquisition_main_queries;
        r.partial_queries = b.partial_queries;
        r.total_main_queries = b.main_queries;
        r.wall_time = b.wall_time;
        r.frac = exact_frac(b.learned, hidden);
        break;
      }
      case Method::LO: {
        LoConfig lc;
        lc.language = cell.data.language;
        lc.query_cutoff = cfg.query_cutoff;
        lc.t_iter = cfg.t_iter;
        lc.t_final = cfg.t_final;
        lc.seed = cell.seed;
        const LoResult lo = learn_optimize(inst, oracle, lc);
        result = lo.best;
        r.value = lo.best_value;
        r.main_queries = lo.trace.loop_main_queries;
        r.partial_queries = lo.trace.partial_queries;
        r.total_main_queries = lo.trace.main_queries;
        r.q_star = lo.trace.q_star;
        r.wall_time = lo.trace.wall_time;
        r.frac = exact_frac(lo.trace.learned_final, hidden);
        if (cfg.trace_dir) {
          const std::string stem = "lo_n" + std::to_string(cell.n) + "_s" + std::to_string(cell.seed);
          write_trace_jsonl(*cfg.trace_dir / (stem + ".jsonl"), lo.trace);
          write_json_file(*cfg.trace_dir / (stem + "_summary.json"), run_summary(lo));
        }
        break;
      }
      }
      r.gap_pct = gap_pct(r.ref_value, r.value);
      r.feasible = is_feasible(hidden, result);
    } catch (const std::exception &e) {
      r.status = std::string("failed: ") + e.what();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<Cell> make_cells(const ExperimentConfig &cfg) {
  std::vector<Cell> cells;
  if (!cfg.fixed_cases.empty()) {
    for (std::size_t k = 0; k < cfg.fixed_cases.size(); ++k)
      cells.push_back(Cell{static_cast<int>(cfg.fixed_cases[k].instance.size()), k, cfg.fixed_cases[k]});
    return cells;
  }
  for (int n : cfg.n_values)
    for (std::uint64_t seed : cfg.seeds)
      cells.push_back(Cell{n, seed, {}});
  return cells;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

std::string quote_csv(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

constexpr const char *kResultsHeader =
    "n,seed,method,value,ref_value,gap_pct,main_queries,partial_queries,q_star,wall_time,frac,"
    "ref_proven,total_main_queries,feasible,status";

} // namespace

std::vector<MetricsRow> run_experiment(const ExperimentConfig &cfg) {
  cfg.validate();
  if (cfg.trace_dir)
    std::filesystem::create_directories(*cfg.trace_dir);

  std::vector<Cell> cells = make_cells(cfg);
  std::vector<std::vector<MetricsRow>> results(cells.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      Cell &cell = cells[k];
      if (cfg.fixed_cases.empty()) {
        GenConfig g = cfg.generator;
        g.n = cell.n;
        g.seed = cell.seed;
        try {
          GeneratedInstance gen = generate(g);
          cell.data = ExperimentCase{std::move(gen.instance), std::move(gen.hidden), gen.language};
        } catch (const std::exception &e) {
          for (Method m : cfg.methods) {
            MetricsRow r;
            r.n = cell.n;
            r.seed = cell.seed;
            r.method = m;
            r.status = std::string("failed: generate: ") + e.what();
            results[k].push_back(r);
          }
          continue;
        }
      }
      results[k] = run_cell(cfg, cell);
    }
  };

  const auto threads = static_cast<std::size_t>(cfg.jobs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(threads, cells.size()); ++t)
      pool.emplace_back(worker);
    for (std::thread &t : pool)
      t.join();
  }

  std::vector<MetricsRow> rows;
  for (auto &part : results)
    for (MetricsRow &r : part)
      rows.push_back(std::move(r));
  return rows;
}

std::vector<SummaryRow> summarize(const std::vector<MetricsRow> &rows) {
  std::map<std::pair<int, Method>, std::vector<const MetricsRow *>> groups;
  for (const MetricsRow &r : rows)
    groups[{r.n, r.method}].push_back(&r);

  auto mean = [](const std::vector<double> &xs) {
    if (xs.empty())
      return 0.0;
    double s = 0.0;
    for (double x : xs)
      s += x;
    return s / static_cast<double>(xs.size());
  };

  std::vector<SummaryRow> out;
  for (const auto &[key, group] : groups) {
    SummaryRow s;
    s.n = key.first;
    s.method = key.second;
    std::vector<double> gaps, mains, partials, qs, times, fracs;
    for (const MetricsRow *r : group) {
      ++s.runs;
      if (!r->ref_proven)
        s.dagger = true;
      if (r->failed()) {
        ++s.failed;
        continue;
      }
      gaps.push_back(r->gap_pct);
      mains.push_back(static_cast<double>(r->main_queries));
      partials.push_back(static_cast<double>(r->partial_queries));
      if (r->q_star >= 0)
        qs.push_back(r->q_star);
      times.push_back(r->wall_time);
      fracs.push_back(r->frac);
    }
    s.gap_mean = mean(gaps);
    if (gaps.size() > 1) {
      double ss = 0.0;
      for (double g : gaps)
        ss += (g - s.gap_mean) * (g - s.gap_mean);
      s.gap_std = std::sqrt(ss / static_cast<double>(gaps.size() - 1));
    }
    s.main_mean = mean(mains);
    s.partial_mean = mean(partials);
    s.q_star_mean = qs.empty() ? -1.0 : mean(qs);
    s.time_mean = mean(times);
    s.frac_mean = mean(fracs);
    out.push_back(s);
  }

  for (SummaryRow &lo : out) {
    if (lo.method != Method::LO || lo.time_mean <= 0.0)
      continue;
    for (const SummaryRow &f : out)
      if (f.n == lo.n && f.method == Method::FAO)
        lo.speedup = f.time_mean / lo.time_mean;
  }
  return out;
}

void write_results_csv(std::ostream &out, const std::vector<MetricsRow> &rows, bool timing) {
  out << kResultsHeader << '\n';
  for (const MetricsRow &r : rows) {
    out << r.n << ',' << r.seed << ',' << to_string(r.method) << ',' << format_double(r.value) << ','
        << format_double(r.ref_value) << ',' << format_double(r.gap_pct) << ',' << r.main_queries
        << ',' << r.partial_queries << ',' << r.q_star << ','
        << format_double(timing ? r.wall_time : 0.0) << ',' << format_double(r.frac) << ','
        << (r.ref_proven ? 1 : 0) << ',' << r.total_main_queries << ',' << (r.feasible ? 1 : 0)
        << ',' << quote_csv(r.status) << '\n';
  }
}

std::vector<MetricsRow> read_results_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader)
    throw ValidationError("results CSV has an unexpected header");
  std::vector<MetricsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 15)
      throw ValidationError("results CSV row has " + std::to_string(f.size()) + " fields");
    MetricsRow r;
    r.n = std::stoi(f[0]);
    r.seed = std::stoull(f[1]);
    r.method = method_from_string(f[2]);
    r.value = std::stod(f[3]);
    r.ref_value = std::stod(f[4]);
    r.gap_pct = std::stod(f[5]);
    r.main_queries = std::stoll(f[6]);
    r.partial_queries = std::stoll(f[7]);
    r.q_star = std::stoi(f[8]);
    r.wall_time = std::stod(f[9]);
    r.frac = std::stod(f[10]);
    r.ref_proven = f[11] == "1";
    r.total_main_queries = std::stoll(f[12]);
    r.feasible = f[13] == "1";
    r.status = f[14];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &summary) {
  out << "n,method,runs,failed,gap_mean,gap_std,main_mean,partial_mean,q_star_mean,time_mean,"
         "frac_mean,speedup,ref\n";
  for (const SummaryRow &s : summary) {
    out << s.n << ',' << to_string(s.method) << ',' << s.runs << ',' << s.failed << ','
        << format_fixed(s.gap_mean, 3) << ',' << format_fixed(s.gap_std, 3) << ','
        << format_fixed(s.main_mean, 3) << ',' << format_fixed(s.partial_mean, 3) << ','
        << (s.q_star_mean < 0.0 ? std::string("NA") : format_fixed(s.q_star_mean, 3)) << ','
        << format_fixed(s.time_mean, 4) << ',' << format_fixed(s.frac_mean, 4) << ','
        << (s.speedup > 0.0 ? format_fixed(s.speedup, 2) : std::string("NA")) << ','
        << (s.dagger ? "best-feasible" : "optimal") << '\n';
  }
}

std::vector<TracePoint> trace_points(const RunTrace &trace) {
  std::vector<TracePoint> out;
  for (const IterationRecord &r : trace.iterations)
    out.push_back(TracePoint{r.q, r.v_L, r.best_value_so_far, !r.accepted});
  return out;
}

std::vector<TracePoint> read_trace_points(std::istream &jsonl) {
  std::vector<TracePoint> out;
  std::string line;
  while (std::getline(jsonl, line)) {
    if (line.empty())
      continue;
    const json j = json::parse(line);
    out.push_back(TracePoint{j.at("q").get<int>(), j.at("v_L").get<double>(),
                             j.at("best_value_so_far").get<double>(),
                             j.at("verdict").get<std::string>() == "no"});
  }
  return out;
}

void write_trace_plot_csv(std::ostream &out, const std::vector<TracePoint> &points) {
  out << "iteration,v_L,best_so_far,rejected\n";
  for (const TracePoint &p : points)
    out << p.iteration << ',' << format_double(p.v_L) << ',' << format_double(p.best_so_far) << ','
        << (p.rejected ? 1 : 0) << '\n';
}

} // namespace eosp
