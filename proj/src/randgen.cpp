#include "iesat/randgen.hpp"

#include "iesat/errors.hpp"

#include <algorithm>
#include <string>

namespace iesat {

Formula rand_nf(const GenSpec& spec, Kind kind) {
    if (spec.num_vars < 1) throw InvalidSpecError("variable count must be positive");
    if (spec.num_clauses < 0) throw InvalidSpecError("clause count must be nonnegative");
    if (spec.clause_width < 1 || spec.clause_width > spec.num_vars) {
        throw InvalidSpecError("clause width " + std::to_string(spec.clause_width) +
                               " must be in [1, " + std::to_string(spec.num_vars) + "]");
    }

    Rng rng(spec.seed);
    const auto n = static_cast<std::uint64_t>(spec.num_vars);
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(spec.num_clauses));
    std::vector<Lit> lits;
    for (int c = 0; c < spec.num_clauses; ++c) {
        lits.clear();
        for (int j = 0; j < spec.clause_width; ++j) {
            int var;
            bool fresh;
            do {
                var = static_cast<int>(rng.below(n)) + 1;
                fresh = std::none_of(lits.begin(), lits.end(), [var](Lit l) {
                    return var_of(l) == var;
                });
            } while (!fresh);
            lits.push_back(rng.coin() ? var : -var);
        }
        clauses.emplace_back(lits);
    }
    return Formula(kind, spec.num_vars, std::move(clauses));
}

} // namespace iesat
