"""Smoke tests for the python bindings: every exported entry point gets at
least one call with a value pinned against the C++ suites. Runs standalone
(python test_smoke.py) or under pytest."""

import iesat
from iesat import Clause, Formula, Kind, LllVariant, LllVerdict


def test_module_metadata():
    assert iesat.__version__ == "0.1.0"
    assert iesat.PRNG_ID == "mt19937_64-rejection/1"


def test_formula_construction_and_io():
    f = Formula(Kind.dnf, 3, [[2, 1, 2], [-3]])
    assert f.num_vars == 3 and len(f) == 2
    assert f.clauses[0].lits == [1, 2]  # canonicalized: sorted, deduped
    text = iesat.serialize_native(f)
    assert text == '{"kind":"dnf","vars":3,"clauses":[[1,2],[-3]]}'
    assert iesat.parse_native(text) == f

    g = iesat.parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n3 0\n")
    assert g.kind == Kind.cnf and len(g) == 2
    assert iesat.write_dimacs(g) == "p cnf 3 2\n1 -2 3 0\n3 0\n"


def test_clause_operations():
    merged = iesat.merge(Clause([1, -2]), Clause([3]))
    assert merged is not None and merged.lits == [1, -2, 3]
    assert iesat.merge(Clause([1]), Clause([-1])) is None
    p = iesat.clause_probability(Clause([1, -2]), 4)
    assert (p.numerator, p.exponent) == (4, 4)  # 2^-2 over 2^4
    assert str(p) == "1/2^2"  # str() prints lowest terms
    assert float(p) == 0.25


def test_evaluate_and_negate():
    f = Formula(Kind.dnf, 2, [[1, -2]])
    assert iesat.evaluate(f, 0b01) is True  # x1=T, x2=F
    assert iesat.evaluate(f, 0b11) is False
    c = Formula(Kind.cnf, 2, [[1, -2], [2]])
    assert iesat.negate_dnf_to_cnf(iesat.negate_cnf_to_dnf(c)) == c


def test_generator_reproducibility():
    f = iesat.rand_nf(6, 4, 3, seed=42)
    assert iesat.serialize_native(f) == (
        '{"kind":"dnf","vars":6,"clauses":[[1,-5,-6],[1,-2,-5],[-2,3,5],[-2,-4,5]]}'
    )
    g = iesat.rand_nf(6, 4, 3, seed=42, kind=Kind.cnf)
    assert g.kind == Kind.cnf
    assert [c.lits for c in g.clauses] == [c.lits for c in f.clauses]
    assert iesat.derive_subseed(0, 0) == 16294208416658607535
    assert iesat.derive_subseed(12345, 7) == 7959005890829367068


def test_solver():
    cover = Formula(Kind.dnf, 1, [[1], [-1]])
    out = iesat.taut(cover, threshold=2)
    assert out.decided and out.is_tautology and out.level == 2
    assert out.stats.terms_evaluated == 2

    stuck = iesat.taut(cover, threshold=1)
    assert not stuck.decided and stuck.level == 1
    assert (stuck.partial.numerator, stuck.partial.exponent) == (2, 1)  # P_1 = 1
    assert '"decided":false' in stuck.to_json()

    exact = iesat.exact_union_probability(Formula(Kind.dnf, 2, [[1]]))
    assert (exact.numerator, exact.exponent) == (2, 2)

    f = iesat.rand_nf(8, 5, 3, seed=7)
    target = iesat.exact_union_probability(f)
    for level, bound in iesat.bonferroni_bounds(f, 5):
        if level % 2 == 1:
            assert bound.numerator >= target.numerator
        else:
            assert bound.numerator <= target.numerator

    unsat = Formula(Kind.cnf, 1, [[1], [-1]])
    sat_out = iesat.solve_cnf_sat(unsat)
    assert sat_out.decided and not sat_out.is_satisfiable
    assert '"is_satisfiable":false' in sat_out.to_json()


def test_oracle():
    f = Formula(Kind.dnf, 2, [[1, -2]])
    assert iesat.count_satisfying(f) == 1
    assert not iesat.is_tautology_bruteforce(f)
    assert iesat.is_satisfiable_bruteforce(Formula(Kind.cnf, 2, [[1], [2]]))


def test_lll():
    sparse = Formula(Kind.dnf, 4, [[1, 2], [3, 4]])
    assert iesat.lll_check_dnf(sparse, LllVariant.symmetric) == LllVerdict.not_tautology
    assert iesat.lll_check_dnf(sparse, LllVariant.asymmetric) == LllVerdict.not_tautology

    dense = Formula(Kind.dnf, 1, [[1], [-1]])
    assert iesat.lll_check_dnf(dense, LllVariant.asymmetric) == LllVerdict.inconclusive

    g = iesat.dnf_to_pg(dense)
    assert len(g) == 2 and g.max_degree() == 1
    assert g.adjacency == [[1], [0]]
    assert not iesat.lll_symmetric(g) and not iesat.lll_asymmetric(g)
    report = iesat.lll_report(g, LllVariant.asymmetric)
    assert not report.holds and report.failing == [0, 1]
    assert report.p_max == "1/2"
    ok = iesat.lll_report(iesat.dnf_to_pg(sparse), LllVariant.symmetric)
    assert ok.holds and ok.failing == []


def test_errors():
    for exc in (iesat.MalformedError, iesat.KindError, iesat.ParseError,
                iesat.InvalidSpecError, iesat.TooLargeError,
                iesat.ResourceLimitError):
        assert issubclass(exc, iesat.Error)

    def raises(exc, fn):
        try:
            fn()
        except exc:
            return True
        return False

    assert raises(iesat.ParseError, lambda: iesat.parse_native("garbage"))
    assert raises(iesat.KindError,
                  lambda: iesat.taut(Formula(Kind.cnf, 1, [[1]])))
    assert raises(iesat.TooLargeError,
                  lambda: iesat.count_satisfying(iesat.rand_nf(30, 2, 3, seed=1)))
    assert raises(iesat.InvalidSpecError, lambda: iesat.rand_nf(2, 1, 3, seed=0))
    assert raises(iesat.MalformedError, lambda: Clause([1, 0]))
    assert raises(iesat.ResourceLimitError,
                  lambda: iesat.taut(iesat.rand_nf(30, 12, 3, seed=21),
                                     max_table_entries=10))


if __name__ == "__main__":
    import sys
    import traceback

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except Exception:
                failures += 1
                print(f"FAIL {name}")
                traceback.print_exc()
    sys.exit(1 if failures else 0)
