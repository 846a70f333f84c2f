#pragma once

#include "iesat/dyadic.hpp"
#include "iesat/formula.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace iesat {

using BigRational = boost::multiprecision::cpp_rational;

// Clause dependency graph: probs[i] = Pr[clause i's conjunction holds] and
// adjacency[i] = the other clauses sharing a variable with clause i (sign
// ignored, no self-loops, 0-based, symmetric).
struct DependencyGraph {
    std::vector<Dyadic> probs;
    std::vector<std::vector<int>> adjacency;

    std::size_t size() const { return probs.size(); }
    int max_degree() const;
    Dyadic max_prob() const; // 0/2^0 when empty
};

DependencyGraph dnf_to_pg(const Formula& f);

// Symmetric condition e * p * (d+1) <= 1 with p = max prob, d = max degree.
// e is irrational, so the test actually run is p * (d+1) <= 1/E with E a
// fixed decimal rounded UP from e; a true answer therefore never depends on
// rounding. true means all events can simultaneously fail, i.e. the source
// DNF is not a tautology. An empty graph is vacuously true.
bool lll_symmetric(const DependencyGraph& g);

// Weighted condition with x_i = 1/(deg_i + 1), checked per vertex in exact
// rational arithmetic: P_i <= x_i * prod_{j in G[i]} (1 - x_j). An isolated
// vertex would get x_i = 1, outside the lemma's [0,1) range; it passes iff
// P_i < 1, which suffices because an isolated event is independent of all
// others.
bool lll_asymmetric(const DependencyGraph& g);

enum class LllVariant { symmetric, asymmetric };
enum class LllVerdict { not_tautology, inconclusive };

// dnf_to_pg composed with the chosen check. Never claims "tautology".
LllVerdict lll_check_dnf(const Formula& f, LllVariant variant);

// Detailed result for reporting: the verdict plus which vertices broke the
// per-vertex condition (0-based; for the symmetric variant, the vertices
// whose own probability violates e * P_i * (d+1) <= 1 with the global d).
struct LllReport {
    bool holds = false;
    BigRational p_max;
    int d_max = 0;
    std::vector<int> failing;
};

LllReport lll_report(const DependencyGraph& g, LllVariant variant);

inline BigRational to_rational(const Dyadic& d) {
    return BigRational(d.numerator(), BigInt(1) << d.exponent());
}

} // namespace iesat
