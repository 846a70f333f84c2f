#include "iesat/formula.hpp"

#include <algorithm>
#include <string>

namespace iesat {

namespace {

// Sort key: variable index first, then sign, so that a variable and its
// negation are adjacent and duplicate literals collapse under unique().
bool lit_less(Lit a, Lit b) {
    const int va = var_of(a), vb = var_of(b);
    return va != vb ? va < vb : a < b;
}

} // namespace

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    for (Lit lit : lits_) {
        if (lit == 0) throw MalformedError("zero literal in clause");
    }
    std::sort(lits_.begin(), lits_.end(), lit_less);
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::consistent() const {
    for (std::size_t i = 1; i < lits_.size(); ++i) {
        if (var_of(lits_[i - 1]) == var_of(lits_[i])) return false;
    }
    return true;
}

bool Clause::contains(Lit lit) const {
    return std::binary_search(lits_.begin(), lits_.end(), lit, lit_less);
}

bool merge_into(std::span<const Lit> a, std::span<const Lit> b, std::vector<Lit>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int va = var_of(a[i]), vb = var_of(b[j]);
        if (va < vb) {
            out.push_back(a[i++]);
        } else if (vb < va) {
            out.push_back(b[j++]);
        } else {
            if (a[i] != b[j]) return false; // {v, -v}
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return true;
}

std::optional<Clause> merge(const Clause& a, const Clause& b) {
    // merge_into assumes one literal per variable on each side; an input that
    // is itself inconsistent can never merge to a consistent set.
    if (!a.consistent() || !b.consistent()) return std::nullopt;
    std::vector<Lit> out;
    if (!merge_into(a.lits(), b.lits(), out)) return std::nullopt;
    return Clause(std::move(out));
}

Dyadic clause_probability(const Clause& c, int num_vars) {
    if (c.max_var() > num_vars) {
        throw MalformedError("clause references variable " +
                             std::to_string(c.max_var()) + " but formula has " +
                             std::to_string(num_vars) + " variables");
    }
    const auto n = static_cast<unsigned>(num_vars);
    if (!c.consistent()) return Dyadic::zero(n);
    return Dyadic::pow2_inverse(static_cast<unsigned>(c.size()), n);
}

Formula::Formula(Kind kind, int num_vars, std::vector<Clause> clauses)
    : kind_(kind), num_vars_(num_vars), clauses_(std::move(clauses)) {
    if (num_vars_ < 1) throw MalformedError("variable count must be positive");
    for (const Clause& c : clauses_) {
        if (c.max_var() > num_vars_) {
            throw MalformedError("clause references variable " +
                                 std::to_string(c.max_var()) +
                                 " beyond declared count " +
                                 std::to_string(num_vars_));
        }
    }
}

Assignment Assignment::from_mask(std::uint64_t mask, int num_vars) {
    Assignment a;
    a.bits.resize(static_cast<std::size_t>(num_vars));
    for (int v = 0; v < num_vars; ++v) a.bits[v] = (mask >> v) & 1;
    return a;
}

bool evaluate(const Formula& f, const Assignment& a) {
    if (f.kind() == Kind::dnf) {
        for (const Clause& c : f.clauses()) {
            bool all = true;
            for (Lit lit : c.lits()) {
                if (!a.satisfies(lit)) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }
    for (const Clause& c : f.clauses()) {
        bool any = false;
        for (Lit lit : c.lits()) {
            if (a.satisfies(lit)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

namespace {

Formula negate(const Formula& f, Kind expect, Kind result) {
    if (f.kind() != expect) {
        throw KindError(std::string("expected a ") + kind_name(expect) +
                        ", got a " + kind_name(f.kind()));
    }
    std::vector<Clause> flipped;
    flipped.reserve(f.size());
    for (const Clause& c : f.clauses()) {
        std::vector<Lit> lits(c.lits().begin(), c.lits().end());
        for (Lit& lit : lits) lit = -lit;
        flipped.emplace_back(std::move(lits));
    }
    return Formula(result, f.num_vars(), std::move(flipped));
}

} // namespace

Formula negate_cnf_to_dnf(const Formula& f) { return negate(f, Kind::cnf, Kind::dnf); }
Formula negate_dnf_to_cnf(const Formula& f) { return negate(f, Kind::dnf, Kind::cnf); }

} // namespace iesat
