#pragma once

#include "iesat/formula.hpp"
#include "iesat/ie_solver.hpp"

#include <string>
#include <string_view>

namespace iesat {

// Native formula format, one JSON document:
//   {"kind":"dnf"|"cnf","vars":<int>,"clauses":[[<int>...],...]}
// Literals are nonzero integers; clause order is preserved as given.
// parse(serialize(f)) == f. Syntax errors carry line/column.
Formula parse_native(std::string_view text);
std::string serialize_native(const Formula& f);

// DIMACS CNF: optional leading 'c' comment lines, one "p cnf <vars> <clauses>"
// header, then 0-terminated clauses. The clause count must match the header.
Formula parse_dimacs(std::string_view text);

// Writer counterpart: LF line endings, one clause per line. CNF only.
std::string write_dimacs(const Formula& f);

// Solver outcome as a single JSON object:
//   {"decided":bool, "is_tautology"?:bool, "level":int,
//    "partial_numerator"?:decimal string, "exponent":int,
//    "terms_evaluated":int, "table_peak":int, "wall_ms":double}
// partial_numerator is present for undecided outcomes (arbitrary precision,
// hence a string).
std::string outcome_to_json(const SolverOutcome& o);

// Same shape with "is_satisfiable" in place of "is_tautology".
std::string outcome_to_json(const SatOutcome& o);

} // namespace iesat
