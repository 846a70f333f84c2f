"""Exact DNF-tautology / CNF-satisfiability decisions via truncated
inclusion-exclusion, plus Lovász-local-lemma non-tautology screening.

Thin re-export of the compiled core; see the individual docstrings there.
"""

from iesat._core import (
    PRNG_ID,
    Clause,
    DependencyGraph,
    Dyadic,
    Error,
    Formula,
    InvalidSpecError,
    Kind,
    KindError,
    LllReport,
    LllVariant,
    LllVerdict,
    MalformedError,
    ParseError,
    ResourceLimitError,
    SatOutcome,
    SolverOutcome,
    SolverStats,
    TooLargeError,
    __version__,
    bonferroni_bounds,
    clause_probability,
    count_satisfying,
    derive_subseed,
    dnf_to_pg,
    evaluate,
    exact_union_probability,
    is_satisfiable_bruteforce,
    is_tautology_bruteforce,
    lll_asymmetric,
    lll_check_dnf,
    lll_report,
    lll_symmetric,
    merge,
    negate_cnf_to_dnf,
    negate_dnf_to_cnf,
    parse_dimacs,
    parse_native,
    rand_nf,
    serialize_native,
    solve_cnf_sat,
    taut,
    write_dimacs,
)

__all__ = [
    "PRNG_ID",
    "Clause",
    "DependencyGraph",
    "Dyadic",
    "Error",
    "Formula",
    "InvalidSpecError",
    "Kind",
    "KindError",
    "LllReport",
    "LllVariant",
    "LllVerdict",
    "MalformedError",
    "ParseError",
    "ResourceLimitError",
    "SatOutcome",
    "SolverOutcome",
    "SolverStats",
    "TooLargeError",
    "__version__",
    "bonferroni_bounds",
    "clause_probability",
    "count_satisfying",
    "derive_subseed",
    "dnf_to_pg",
    "evaluate",
    "exact_union_probability",
    "is_satisfiable_bruteforce",
    "is_tautology_bruteforce",
    "lll_asymmetric",
    "lll_check_dnf",
    "lll_report",
    "lll_symmetric",
    "merge",
    "negate_cnf_to_dnf",
    "negate_dnf_to_cnf",
    "parse_dimacs",
    "parse_native",
    "rand_nf",
    "serialize_native",
    "solve_cnf_sat",
    "taut",
    "write_dimacs",
]
