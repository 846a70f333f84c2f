#pragma once

// Shared helpers for the test suites.

#include "iesat/formula.hpp"
#include "iesat/randgen.hpp"

#include <initializer_list>
#include <vector>

namespace iesat::testing {

inline Clause C(std::initializer_list<Lit> lits) { return Clause(std::vector<Lit>(lits)); }

inline Formula make(Kind kind, int num_vars, const std::vector<std::vector<Lit>>& clauses) {
    std::vector<Clause> cs;
    cs.reserve(clauses.size());
    for (const auto& c : clauses) cs.emplace_back(c);
    return Formula(kind, num_vars, std::move(cs));
}

inline Formula dnf(int num_vars, const std::vector<std::vector<Lit>>& clauses) {
    return make(Kind::dnf, num_vars, clauses);
}

inline Formula cnf(int num_vars, const std::vector<std::vector<Lit>>& clauses) {
    return make(Kind::cnf, num_vars, clauses);
}

// Unconstrained random normal form: clauses may be empty, contradictory, or
// exact duplicates — everything rand_nf rules out but parsers and the solver
// must still handle.
inline Formula random_messy(Rng& rng, Kind kind, int max_vars = 8, int max_clauses = 6,
                            int max_width = 4) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars)));
    const int num_clauses = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_clauses) + 1));
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(num_clauses));
    for (int i = 0; i < num_clauses; ++i) {
        const int width = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_width) + 1));
        std::vector<Lit> lits;
        lits.reserve(static_cast<std::size_t>(width));
        for (int j = 0; j < width; ++j) {
            const Lit v = 1 + static_cast<Lit>(rng.below(static_cast<std::uint64_t>(n)));
            lits.push_back(rng.coin() ? v : -v);
        }
        clauses.emplace_back(std::move(lits));
    }
    return Formula(kind, n, std::move(clauses));
}

} // namespace iesat::testing
