#pragma once

#include "iesat/dyadic.hpp"
#include "iesat/errors.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

namespace iesat {

// A literal is a nonzero signed integer: |lit| is the 1-based variable index,
// the sign is the polarity. Same encoding as DIMACS.
using Lit = std::int32_t;

inline int var_of(Lit lit) { return lit < 0 ? -lit : lit; }
inline bool is_positive(Lit lit) { return lit > 0; }

enum class Kind { dnf, cnf };

inline const char* kind_name(Kind k) { return k == Kind::dnf ? "dnf" : "cnf"; }

// A set of literals, stored as an array sorted by (variable, sign) with exact
// duplicates removed. Inside a DNF a clause is a conjunction, inside a CNF a
// disjunction; the merge/probability operations below use the conjunction
// reading. A clause is "consistent" iff it holds no variable together with
// its negation.
class Clause {
public:
    Clause() = default;

    // Canonicalizes. Throws MalformedError on a zero literal.
    explicit Clause(std::vector<Lit> lits);

    std::span<const Lit> lits() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }

    bool consistent() const;
    bool contains(Lit lit) const;
    int max_var() const { return lits_.empty() ? 0 : var_of(lits_.back()); }

    bool operator==(const Clause&) const = default;

private:
    std::vector<Lit> lits_;
};

// Conjunction of two literal sets: the set union, or nullopt when the union
// would contain both a variable and its negation ("incompatible").
std::optional<Clause> merge(const Clause& a, const Clause& b);

// Merge into a caller-provided buffer; returns false on incompatibility.
// Both inputs must be canonically sorted spans. Used on the solver hot path.
bool merge_into(std::span<const Lit> a, std::span<const Lit> b, std::vector<Lit>& out);

// Probability that a uniform random assignment over num_vars variables
// satisfies the conjunction c: 0 if inconsistent, else 2^-|c|, expressed with
// exponent num_vars. Throws MalformedError if c references a variable beyond
// num_vars.
Dyadic clause_probability(const Clause& c, int num_vars);

// A normal form: an ordered list of clauses over a declared variable count.
// num_vars is explicit rather than inferred so probability exponents stay
// stable when some variables never appear. Clause order is preserved
// (clauses are indexed 1..N for subset bookkeeping).
class Formula {
public:
    Formula(Kind kind, int num_vars, std::vector<Clause> clauses);

    Kind kind() const { return kind_; }
    int num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }

    bool operator==(const Formula&) const = default;

private:
    Kind kind_ = Kind::dnf;
    int num_vars_ = 1;
    std::vector<Clause> clauses_;
};

// Total truth assignment for variables 1..n.
struct Assignment {
    std::vector<bool> bits; // bits[i] is the value of variable i+1

    static Assignment from_mask(std::uint64_t mask, int num_vars);
    bool value(int var) const { return bits[static_cast<std::size_t>(var) - 1]; }
    bool satisfies(Lit lit) const { return value(var_of(lit)) == is_positive(lit); }
};

// DNF: some clause fully satisfied. CNF: every clause has a satisfied
// literal. Empty DNF is false, empty CNF is true; an empty clause is true
// inside a DNF and false inside a CNF.
bool evaluate(const Formula& f, const Assignment& a);

// De Morgan negation, literal-wise: the i-th output clause is the i-th input
// clause with all signs flipped. A CNF is satisfiable iff its negation (a
// DNF) is not a tautology.
Formula negate_cnf_to_dnf(const Formula& f);
Formula negate_dnf_to_cnf(const Formula& f);

} // namespace iesat
