#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eosp/baselines.hpp"
#include "eosp/generator.hpp"
#include "eosp/json_io.hpp"
#include "eosp/learn_optimize.hpp"

namespace py = pybind11;
using namespace eosp;

namespace {

// Results go through JSON so Python sees plain dicts with the same keys as the CLI.
py::object to_py(const json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

Assignment to_assignment(const std::vector<Slot> &slots) { return Assignment(slots); }

// Any Python iterable of Sep / Cap.
using Constraints = std::vector<Constraint>;
ConstraintSet to_set(const Constraints &cs) { return ConstraintSet(cs.begin(), cs.end()); }

py::object solve_result(const SolveResult &r) { return to_py(json(r)); }

} // namespace

PYBIND11_MODULE(_eosp, m) {
  m.doc() = "Scheduling under unknown constraints: solver, oracle, constraint acquisition and baselines.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError", PyExc_RuntimeError);
  py::register_exception<AcquisitionStuck>(m, "AcquisitionStuck", PyExc_RuntimeError);

  py::class_<Window>(m, "Window")
      .def(py::init<Slot, Slot>(), py::arg("lo"), py::arg("hi"))
      .def_readwrite("lo", &Window::lo)
      .def_readwrite("hi", &Window::hi)
      .def("__len__", &Window::length)
      .def("__contains__", &Window::contains)
      .def("__repr__", [](const Window &w) {
        return "Window(" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + ")";
      });

  py::class_<Task>(m, "Task")
      .def(py::init([](TaskId id, double weight, Window w) { return Task{id, weight, w}; }), py::arg("id"),
           py::arg("weight"), py::arg("window"))
      .def_readonly("id", &Task::id)
      .def_readonly("weight", &Task::weight)
      .def_readonly("window", &Task::window);

  py::class_<Instance>(m, "Instance")
      .def(py::init<int, std::vector<Task>>(), py::arg("horizon"), py::arg("tasks"))
      .def_property_readonly("horizon", &Instance::horizon)
      .def_property_readonly("tasks", &Instance::tasks)
      .def("__len__", &Instance::size)
      .def("to_dict", [](const Instance &i) { return to_py(json(i)); })
      .def_static("from_json", [](const std::string &s) { return json::parse(s).get<Instance>(); });

  py::class_<SeparationConstraint>(m, "Sep")
      .def(py::init(&make_sep), py::arg("i"), py::arg("j"), py::arg("delta"))
      .def_readonly("i", &SeparationConstraint::i)
      .def_readonly("j", &SeparationConstraint::j)
      .def_readonly("delta", &SeparationConstraint::delta)
      .def(py::self == py::self)
      .def("__hash__", [](const SeparationConstraint &s) { return py::hash(py::make_tuple(s.i, s.j, s.delta)); })
      .def("__repr__", [](const SeparationConstraint &s) { return to_string(Constraint{s}); });

  py::class_<CapacityConstraint>(m, "Cap")
      .def(py::init(&make_cap), py::arg("k"), py::arg("w"))
      .def_readonly("k", &CapacityConstraint::k)
      .def_readonly("w", &CapacityConstraint::w)
      .def(py::self == py::self)
      .def("__hash__", [](const CapacityConstraint &c) { return py::hash(py::make_tuple(c.k, c.w)); })
      .def("__repr__", [](const CapacityConstraint &c) { return to_string(Constraint{c}); });

  py::class_<LanguageConfig>(m, "Language")
      .def(py::init([](int dmin, int dmax, int k, int w, int r, std::optional<std::vector<CapacityConstraint>> caps) {
             LanguageConfig lang{dmin, dmax, k, w, r, std::move(caps)};
             lang.validate();
             return lang;
           }),
           py::arg("sep_delta_min") = 2, py::arg("sep_delta_max") = 10, py::arg("cap_center_k") = 1,
           py::arg("cap_center_w") = 1, py::arg("cap_radius") = 2, py::arg("cap_candidates") = py::none())
      .def_readonly("sep_delta_min", &LanguageConfig::sep_delta_min)
      .def_readonly("sep_delta_max", &LanguageConfig::sep_delta_max)
      .def_readonly("cap_center_k", &LanguageConfig::cap_center_k)
      .def_readonly("cap_center_w", &LanguageConfig::cap_center_w)
      .def_readonly("cap_radius", &LanguageConfig::cap_radius)
      .def("basis_size", [](const LanguageConfig &lang, const Instance &inst) {
        return CandidateBasis::language(lang, inst).size();
      });

  py::class_<HiddenOracle>(m, "Oracle")
      .def(py::init([](Instance inst, const Constraints &hidden) { return HiddenOracle(std::move(inst), to_set(hidden)); }),
           py::arg("instance"), py::arg("hidden"))
      .def(
          "ask",
          [](HiddenOracle &o, const std::vector<Slot> &slots, bool partial) {
            return o.ask(to_assignment(slots), partial ? QueryKind::Partial : QueryKind::Main);
          },
          py::arg("slots"), py::arg("partial") = false)
      .def_property_readonly("stats", [](const HiddenOracle &o) { return to_py(json(o.stats())); });

  m.def(
      "objective",
      [](const Instance &inst, const std::vector<Slot> &slots) { return objective_value(inst, to_assignment(slots)); },
      py::arg("instance"), py::arg("slots"));
  m.def(
      "is_feasible",
      [](const Constraints &cs, const std::vector<Slot> &slots) { return is_feasible(to_set(cs), to_assignment(slots)); },
      py::arg("constraints"), py::arg("slots"));
  m.def("dominates", &dominates, py::arg("a"), py::arg("b"));

  m.def(
      "solve",
      [](const Instance &inst, const Constraints &cs, double time_limit) {
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(inst, to_set(cs), time_limit);
        }
        return solve_result(r);
      },
      py::arg("instance"), py::arg("constraints"), py::arg("time_limit") = kDefaultSolveTimeLimit);
  m.def(
      "brute_force",
      [](const Instance &inst, const Constraints &cs) { return solve_result(brute_force(inst, to_set(cs))); },
      py::arg("instance"), py::arg("constraints"));

  m.def(
      "generate",
      [](int n, std::uint64_t seed) {
        GenConfig cfg;
        cfg.n = n;
        cfg.seed = seed;
        GeneratedInstance g = generate(cfg);
        return py::make_tuple(g.instance, Constraints(g.hidden.begin(), g.hidden.end()), g.language);
      },
      py::arg("n"), py::arg("seed") = 0, "Returns (instance, hidden constraints, language).");
  m.def("default_cap_k", &default_cap_k, py::arg("n"));

  m.def(
      "learn_optimize",
      [](const Instance &inst, HiddenOracle &oracle, const LanguageConfig &lang, int q_cutoff, double t_iter,
         double t_final) {
        const LoResult r = learn_optimize(inst, oracle, LoConfig{lang, q_cutoff, t_iter, t_final, 0});
        json out = run_summary(r);
        json iterations = json::array();
        for (const IterationRecord &rec : r.trace.iterations)
          iterations.push_back(rec);
        out["iterations"] = std::move(iterations);
        return to_py(out);
      },
      py::arg("instance"), py::arg("oracle"), py::arg("language"), py::arg("q_cutoff") = 100,
      py::arg("t_iter") = kDefaultSolveTimeLimit, py::arg("t_final") = kDefaultSolveTimeLimit);
  m.def(
      "priority_greedy",
      [](const Instance &inst, HiddenOracle &oracle) { return to_py(json(priority_greedy(inst, oracle))); },
      py::arg("instance"), py::arg("oracle"));
  m.def(
      "fao",
      [](const Instance &inst, HiddenOracle &oracle, const LanguageConfig &lang, int budget, double t_iter,
         double t_final, std::uint64_t seed, bool random_proposals) {
        FaoConfig cfg{lang, budget, t_iter, t_final, seed,
                      random_proposals ? FaoProposals::RandomFeasible : FaoProposals::SolveUnderLearned};
        return to_py(json(fao(inst, oracle, cfg)));
      },
      py::arg("instance"), py::arg("oracle"), py::arg("language"), py::arg("budget") = 100,
      py::arg("t_iter") = kDefaultSolveTimeLimit, py::arg("t_final") = kDefaultSolveTimeLimit, py::arg("seed") = 0,
      py::arg("random_proposals") = false);
}
