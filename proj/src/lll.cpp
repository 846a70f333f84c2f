#include "iesat/lll.hpp"

#include "iesat/errors.hpp"

#include <algorithm>

namespace iesat {

namespace {

// e rounded up at 18 decimal places: E_NUM / E_DEN >= e. The symmetric test
// p*(d+1) <= E_DEN/E_NUM is then a sound stand-in for e*p*(d+1) <= 1.
const BigInt kENumerator("2718281828459045236");
const BigInt kEDenominator("1000000000000000000");

// p * (d+1) <= 1/E, exactly: p_num * (d+1) * E_NUM <= 2^p_exp * E_DEN.
bool sym_condition(const Dyadic& p, int degree) {
    return p.numerator() * (degree + 1) * kENumerator <=
           (BigInt(1) << p.exponent()) * kEDenominator;
}

} // namespace

int DependencyGraph::max_degree() const {
    std::size_t d = 0;
    for (const auto& nbrs : adjacency) d = std::max(d, nbrs.size());
    return static_cast<int>(d);
}

Dyadic DependencyGraph::max_prob() const {
    Dyadic p; // 0
    for (const Dyadic& q : probs) {
        if (q > p) p = q;
    }
    return p;
}

DependencyGraph dnf_to_pg(const Formula& f) {
    if (f.kind() != Kind::dnf) throw KindError("dnf_to_pg expects a DNF");

    const auto num_clauses = static_cast<int>(f.size());
    DependencyGraph g;
    g.probs.reserve(f.size());
    for (const Clause& c : f.clauses()) {
        g.probs.push_back(clause_probability(c, f.num_vars()));
    }

    // var -> clauses containing it, then connect each clause to the union of
    // its variables' occupants.
    std::vector<std::vector<int>> by_var(static_cast<std::size_t>(f.num_vars()) + 1);
    for (int i = 0; i < num_clauses; ++i) {
        for (Lit lit : f.clauses()[static_cast<std::size_t>(i)].lits()) {
            auto& occ = by_var[static_cast<std::size_t>(var_of(lit))];
            if (occ.empty() || occ.back() != i) occ.push_back(i); // lits are var-sorted
        }
    }
    g.adjacency.assign(f.size(), {});
    for (int i = 0; i < num_clauses; ++i) {
        std::vector<int>& nbrs = g.adjacency[static_cast<std::size_t>(i)];
        for (Lit lit : f.clauses()[static_cast<std::size_t>(i)].lits()) {
            for (int j : by_var[static_cast<std::size_t>(var_of(lit))]) {
                if (j != i) nbrs.push_back(j);
            }
        }
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

bool lll_symmetric(const DependencyGraph& g) {
    if (g.size() == 0) return true;
    return sym_condition(g.max_prob(), g.max_degree());
}

namespace {

bool asym_vertex_ok(const DependencyGraph& g, std::size_t i) {
    const std::size_t degree = g.adjacency[i].size();
    if (degree == 0) return to_rational(g.probs[i]) < 1;
    // P_i <= 1/(d_i+1) * prod_j d_j/(d_j+1)
    BigRational rhs(1, degree + 1);
    for (int j : g.adjacency[i]) {
        const std::size_t dj = g.adjacency[static_cast<std::size_t>(j)].size();
        rhs *= BigRational(dj, dj + 1);
    }
    return to_rational(g.probs[i]) <= rhs;
}

} // namespace

bool lll_asymmetric(const DependencyGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!asym_vertex_ok(g, i)) return false;
    }
    return true;
}

LllVerdict lll_check_dnf(const Formula& f, LllVariant variant) {
    const DependencyGraph g = dnf_to_pg(f);
    const bool ok =
        variant == LllVariant::symmetric ? lll_symmetric(g) : lll_asymmetric(g);
    return ok ? LllVerdict::not_tautology : LllVerdict::inconclusive;
}

LllReport lll_report(const DependencyGraph& g, LllVariant variant) {
    LllReport r;
    r.p_max = to_rational(g.max_prob());
    r.d_max = g.max_degree();
    if (variant == LllVariant::symmetric) {
        r.holds = lll_symmetric(g);
        if (!r.holds) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (!sym_condition(g.probs[i], r.d_max)) {
                    r.failing.push_back(static_cast<int>(i));
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!asym_vertex_ok(g, i)) r.failing.push_back(static_cast<int>(i));
        }
        r.holds = r.failing.empty();
    }
    return r;
}

} // namespace iesat
