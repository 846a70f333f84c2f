#include "iesat/oracle.hpp"

#include "iesat/errors.hpp"

#include <string>
#include <vector>

namespace iesat {

namespace {

// Bitmask view of a clause: conjunction holds iff the positive variables are
// all 1 and the negative ones all 0; disjunction holds iff any literal does.
// A variable occurring with both signs makes the two conditions clash, which
// is exactly the semantics we want for contradictory clauses.
struct ClauseMasks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};

} // namespace

std::uint64_t count_satisfying(const Formula& f, const OracleLimits& limits) {
    const int n = f.num_vars();
    if (n > limits.max_vars || n > 63) {
        throw TooLargeError("brute-force enumeration over " + std::to_string(n) +
                            " variables exceeds the cap of " +
                            std::to_string(limits.max_vars > 63 ? 63 : limits.max_vars) +
                            "; raise the limit to force it");
    }

    std::vector<ClauseMasks> masks;
    masks.reserve(f.size());
    for (const Clause& c : f.clauses()) {
        ClauseMasks m;
        for (Lit lit : c.lits()) {
            const std::uint64_t bit = 1ULL << (var_of(lit) - 1);
            (is_positive(lit) ? m.pos : m.neg) |= bit;
        }
        masks.push_back(m);
    }

    const bool dnf = f.kind() == Kind::dnf;
    const std::uint64_t total = 1ULL << n;
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool value = !dnf;
        if (dnf) {
            for (const ClauseMasks& m : masks) {
                if ((a & m.pos) == m.pos && (a & m.neg) == 0) {
                    value = true;
                    break;
                }
            }
        } else {
            for (const ClauseMasks& m : masks) {
                if ((a & m.pos) == 0 && (~a & m.neg) == 0) {
                    value = false;
                    break;
                }
            }
        }
        count += value;
    }
    return count;
}

bool is_tautology_bruteforce(const Formula& f, const OracleLimits& limits) {
    if (f.kind() != Kind::dnf) throw KindError("tautology check expects a DNF");
    return count_satisfying(f, limits) == (1ULL << f.num_vars());
}

bool is_satisfiable_bruteforce(const Formula& f, const OracleLimits& limits) {
    if (f.kind() != Kind::cnf) throw KindError("satisfiability check expects a CNF");
    return count_satisfying(f, limits) > 0;
}

} // namespace iesat
