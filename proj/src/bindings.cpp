#include "iesat/ie_solver.hpp"
#include "iesat/io.hpp"
#include "iesat/lll.hpp"
#include "iesat/oracle.hpp"
#include "iesat/randgen.hpp"
#include "iesat/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using namespace iesat;

// Arbitrary-precision values cross the boundary as real python ints.
py::int_ to_py_int(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

SolverConfig make_config(int threshold, std::optional<std::size_t> max_table_entries,
                         std::optional<long> time_budget_ms, int jobs) {
    SolverConfig cfg;
    cfg.threshold = threshold;
    cfg.max_table_entries = max_table_entries;
    if (time_budget_ms) cfg.time_budget = std::chrono::milliseconds(*time_budget_ms);
    cfg.jobs = jobs;
    return cfg;
}

Formula make_formula(Kind kind, int num_vars,
                     const std::vector<std::vector<Lit>>& clauses) {
    std::vector<Clause> cs;
    cs.reserve(clauses.size());
    for (const auto& lits : clauses) cs.emplace_back(lits);
    return Formula(kind, num_vars, std::move(cs));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact DNF-tautology / CNF-satisfiability solver via truncated "
              "inclusion-exclusion, with LLL non-tautology screening.";
    m.attr("__version__") = kVersion;
    m.attr("PRNG_ID") = kPrngId;

    // Translators run newest-first, so the base goes in before the leaves.
    static py::exception<Error> exc_error(m, "Error");
    py::register_exception<MalformedError>(m, "MalformedError", exc_error);
    py::register_exception<KindError>(m, "KindError", exc_error);
    py::register_exception<ParseError>(m, "ParseError", exc_error);
    py::register_exception<InvalidSpecError>(m, "InvalidSpecError", exc_error);
    py::register_exception<TooLargeError>(m, "TooLargeError", exc_error);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", exc_error);

    py::enum_<Kind>(m, "Kind")
        .value("dnf", Kind::dnf)
        .value("cnf", Kind::cnf);
    py::enum_<LllVariant>(m, "LllVariant")
        .value("symmetric", LllVariant::symmetric)
        .value("asymmetric", LllVariant::asymmetric);
    py::enum_<LllVerdict>(m, "LllVerdict")
        .value("not_tautology", LllVerdict::not_tautology)
        .value("inconclusive", LllVerdict::inconclusive);

    py::class_<Dyadic>(m, "Dyadic", "Exact numerator / 2^exponent value.")
        .def_property_readonly("numerator",
                               [](const Dyadic& d) { return to_py_int(d.numerator()); })
        .def_property_readonly("exponent", &Dyadic::exponent)
        .def("normalized", &Dyadic::normalized)
        .def("__float__", &Dyadic::to_double)
        .def("__str__", &Dyadic::str)
        .def("__repr__", [](const Dyadic& d) { return "Dyadic(" + d.str() + ")"; })
        .def("__eq__", [](const Dyadic& a, const Dyadic& b) { return a == b; },
             py::is_operator())
        .def("__lt__", [](const Dyadic& a, const Dyadic& b) { return a < b; },
             py::is_operator());

    py::class_<Clause>(m, "Clause",
                       "Canonicalized literal set (sorted by variable, deduped).")
        .def(py::init<std::vector<Lit>>(), py::arg("lits"))
        .def_property_readonly("lits",
                               [](const Clause& c) {
                                   return std::vector<Lit>(c.lits().begin(),
                                                           c.lits().end());
                               })
        .def("__len__", &Clause::size)
        .def("consistent", &Clause::consistent)
        .def("contains", &Clause::contains, py::arg("lit"))
        .def("__eq__", [](const Clause& a, const Clause& b) { return a == b; },
             py::is_operator())
        .def("__repr__", [](const Clause& c) {
            std::string s = "Clause([";
            for (std::size_t i = 0; i < c.lits().size(); ++i)
                s += (i ? ", " : "") + std::to_string(c.lits()[i]);
            return s + "])";
        });

    py::class_<Formula>(m, "Formula",
                        "Normal form: kind, declared variable count, clause list.")
        .def(py::init(&make_formula), py::arg("kind"), py::arg("num_vars"),
             py::arg("clauses"))
        .def_property_readonly("kind", &Formula::kind)
        .def_property_readonly("num_vars", &Formula::num_vars)
        .def_property_readonly("clauses",
                               [](const Formula& f) { return f.clauses(); })
        .def("__len__", &Formula::size)
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; },
             py::is_operator())
        .def("__repr__",
             [](const Formula& f) { return "Formula(" + serialize_native(f) + ")"; });

    m.def("merge", &merge, py::arg("a"), py::arg("b"),
          "Conjunction of two literal sets; None when incompatible.");
    m.def("clause_probability", &clause_probability, py::arg("clause"),
          py::arg("num_vars"));
    m.def(
        "evaluate",
        [](const Formula& f, std::uint64_t mask) {
            return evaluate(f, Assignment::from_mask(mask, f.num_vars()));
        },
        py::arg("formula"), py::arg("mask"),
        "Evaluate under the assignment whose bit i gives variable i+1 "
        "(num_vars <= 64).");
    m.def("negate_cnf_to_dnf", &negate_cnf_to_dnf, py::arg("formula"));
    m.def("negate_dnf_to_cnf", &negate_dnf_to_cnf, py::arg("formula"));

    m.def("parse_native", &parse_native, py::arg("text"));
    m.def("serialize_native", &serialize_native, py::arg("formula"));
    m.def("parse_dimacs", &parse_dimacs, py::arg("text"));
    m.def("write_dimacs", &write_dimacs, py::arg("formula"));

    m.def(
        "count_satisfying",
        [](const Formula& f, int max_vars) {
            return count_satisfying(f, {max_vars});
        },
        py::arg("formula"), py::arg("max_vars") = OracleLimits{}.max_vars);
    m.def(
        "is_tautology_bruteforce",
        [](const Formula& f, int max_vars) {
            return is_tautology_bruteforce(f, {max_vars});
        },
        py::arg("formula"), py::arg("max_vars") = OracleLimits{}.max_vars);
    m.def(
        "is_satisfiable_bruteforce",
        [](const Formula& f, int max_vars) {
            return is_satisfiable_bruteforce(f, {max_vars});
        },
        py::arg("formula"), py::arg("max_vars") = OracleLimits{}.max_vars);

    m.def(
        "rand_nf",
        [](int num_vars, int num_clauses, int clause_width, std::uint64_t seed,
           Kind kind) {
            return rand_nf({num_vars, num_clauses, clause_width, seed}, kind);
        },
        py::arg("num_vars"), py::arg("num_clauses"), py::arg("clause_width") = 3,
        py::arg("seed") = 0, py::arg("kind") = Kind::dnf,
        "Seeded random normal form; identical streams on every platform.");
    m.def("derive_subseed", &derive_subseed, py::arg("seed"), py::arg("index"));

    py::class_<SolverStats>(m, "SolverStats")
        .def_readonly("terms_evaluated", &SolverStats::terms_evaluated)
        .def_readonly("table_peak", &SolverStats::table_peak)
        .def_property_readonly("wall_us", [](const SolverStats& s) {
            return s.wall.count();
        });

    py::class_<SolverOutcome>(m, "SolverOutcome")
        .def_readonly("decided", &SolverOutcome::decided)
        .def_readonly("is_tautology", &SolverOutcome::is_tautology)
        .def_readonly("level", &SolverOutcome::level)
        .def_readonly("partial", &SolverOutcome::partial)
        .def_readonly("stats", &SolverOutcome::stats)
        .def("to_json",
             [](const SolverOutcome& o) { return outcome_to_json(o); })
        .def("__repr__",
             [](const SolverOutcome& o) { return outcome_to_json(o); });

    py::class_<SatOutcome>(m, "SatOutcome")
        .def_readonly("decided", &SatOutcome::decided)
        .def_readonly("is_satisfiable", &SatOutcome::is_satisfiable)
        .def_readonly("level", &SatOutcome::level)
        .def_readonly("partial", &SatOutcome::partial)
        .def_readonly("stats", &SatOutcome::stats)
        .def("to_json", [](const SatOutcome& o) { return outcome_to_json(o); })
        .def("__repr__", [](const SatOutcome& o) { return outcome_to_json(o); });

    m.def(
        "taut",
        [](const Formula& f, int threshold, std::optional<std::size_t> max_table,
           std::optional<long> time_budget_ms, int jobs) {
            return taut(f, make_config(threshold, max_table, time_budget_ms, jobs));
        },
        py::arg("formula"), py::arg("threshold") = std::numeric_limits<int>::max(),
        py::arg("max_table_entries") = py::none(),
        py::arg("time_budget_ms") = py::none(), py::arg("jobs") = 1,
        "Tautology decision for a DNF by inclusion-exclusion up to the "
        "threshold level, with alternating-bound early exit.");
    m.def(
        "solve_cnf_sat",
        [](const Formula& f, int threshold, std::optional<std::size_t> max_table,
           std::optional<long> time_budget_ms, int jobs) {
            return solve_cnf_sat(
                f, make_config(threshold, max_table, time_budget_ms, jobs));
        },
        py::arg("formula"), py::arg("threshold") = std::numeric_limits<int>::max(),
        py::arg("max_table_entries") = py::none(),
        py::arg("time_budget_ms") = py::none(), py::arg("jobs") = 1,
        "Satisfiability of a CNF via tautology of its De Morgan negation.");
    m.def(
        "exact_union_probability",
        [](const Formula& f) { return exact_union_probability(f); },
        py::arg("formula"));
    m.def(
        "bonferroni_bounds",
        [](const Formula& f, int threshold) { return bonferroni_bounds(f, threshold); },
        py::arg("formula"), py::arg("threshold"),
        "The partial-sum sequence P_1..P_min(K,N) as (level, value) pairs.");

    py::class_<DependencyGraph>(m, "DependencyGraph")
        .def_readonly("probs", &DependencyGraph::probs)
        .def_readonly("adjacency", &DependencyGraph::adjacency)
        .def("max_degree", &DependencyGraph::max_degree)
        .def("__len__", &DependencyGraph::size);

    py::class_<LllReport>(m, "LllReport")
        .def_readonly("holds", &LllReport::holds)
        .def_property_readonly("p_max",
                               [](const LllReport& r) { return r.p_max.str(); })
        .def_readonly("d_max", &LllReport::d_max)
        .def_readonly("failing", &LllReport::failing);

    m.def("dnf_to_pg", &dnf_to_pg, py::arg("formula"),
          "Clause probabilities and variable-sharing dependency graph.");
    m.def("lll_symmetric", &lll_symmetric, py::arg("graph"));
    m.def("lll_asymmetric", &lll_asymmetric, py::arg("graph"));
    m.def("lll_check_dnf", &lll_check_dnf, py::arg("formula"), py::arg("variant"));
    m.def("lll_report", &lll_report, py::arg("graph"), py::arg("variant"));
}
