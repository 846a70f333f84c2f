#pragma once

#include "iesat/dyadic.hpp"
#include "iesat/errors.hpp"
#include "iesat/formula.hpp"

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace iesat {

// Tuning and cutoffs for one solver run. threshold is the depth cap K: the
// deepest inclusion-exclusion level computed before giving up. jobs caps
// worker threads used to expand a level (the result is identical at any
// setting; exact integer aggregation is order-independent).
struct SolverConfig {
    int threshold = std::numeric_limits<int>::max();
    std::optional<std::size_t> max_table_entries;
    std::optional<std::chrono::milliseconds> time_budget;
    int jobs = 1;
};

// Thrown when a table cap or time budget trips mid-run. level_completed is
// the last level whose partial sum was fully accumulated; last_bound carries
// that sum when the thrower had it (taut attaches it, raw level_expand does
// not).
class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& msg, int level_completed,
                       std::optional<Dyadic> last_bound = std::nullopt)
        : Error(msg), level_completed(level_completed),
          last_bound(std::move(last_bound)) {}

    int level_completed;
    std::optional<Dyadic> last_bound;
};

// Level-k state of the inclusion-exclusion enumeration: all compatible
// conjunctions of k of the formula's clauses, aggregated by (merged literal
// set, largest clause index). Extending an entry only by clauses above its
// max index enumerates every k-subset exactly once; aggregation just pools
// subsets whose conjunctions coincide, with a multiplicity counting them.
// Literal arrays live in one pool to keep entries allocation-free.
class LevelTable {
public:
    struct Entry {
        std::uint64_t offset = 0; // into pool
        std::uint32_t length = 0;
        std::uint32_t max_index = 0; // 1-based clause index
        BigInt multiplicity = 0;     // may exceed 64 bits with duplicate clauses
    };

    LevelTable() = default;
    explicit LevelTable(int level) : level_(level) {}

    int level() const { return level_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::span<const Lit> lits(const Entry& e) const {
        return {pool_.data() + e.offset, e.length};
    }
    const std::vector<Entry>& entries() const { return entries_; }

    // Total multiplicity == number of k-subsets represented. For tests.
    BigInt total_multiplicity() const;

    // Appends, aggregating with an existing (lits, max_index) entry if any.
    // Internal building block; exposed for the expansion code and tests.
    void insert(std::span<const Lit> lits, std::uint32_t max_index, const BigInt& multiplicity);

private:
    friend class TableIndex;

    int level_ = 0;
    std::vector<Lit> pool_;
    std::vector<Entry> entries_;
    std::vector<std::uint64_t> hashes_; // per entry, for open-addressing aggregation
    std::vector<std::uint32_t> slots_;  // power-of-two probe table, values entry_index+1
};

// One expansion step: the next level's table plus that level's term of the
// inclusion-exclusion sum, as a numerator over 2^num_vars.
struct Expansion {
    LevelTable table;
    BigInt term_numerator;
};

// Level-1 table: one entry per consistent clause (a contradictory clause has
// probability zero and never joins the table). The term numerator is
// sum(2^(n-|C_j|)) over consistent clauses.
Expansion build_level1(const Formula& f);

// Expands a complete level-k table to level k+1 and returns the level-(k+1)
// term sum. Throws ResourceLimitError when cfg caps are exceeded.
Expansion level_expand(const LevelTable& table, const Formula& f,
                       const SolverConfig& cfg = {});

struct SolverStats {
    std::uint64_t terms_evaluated = 0; // subsets accounted into partial sums (saturating)
    std::size_t table_peak = 0;        // max aggregated entries in any level
    std::chrono::microseconds wall{0};
};

// Decided(is_tautology, level) or Undecided(partial bound, level == K).
// partial always holds the P value at the stopping level.
struct SolverOutcome {
    bool decided = false;
    bool is_tautology = false;
    int level = 0;
    Dyadic partial;
    SolverStats stats;

    static SolverOutcome make_decided(bool is_taut, int level, Dyadic p, SolverStats s) {
        return {true, is_taut, level, std::move(p), std::move(s)};
    }
    static SolverOutcome make_undecided(int level, Dyadic p, SolverStats s) {
        return {false, false, level, std::move(p), std::move(s)};
    }
};

// Decides whether a DNF is a tautology via truncated inclusion-exclusion.
//
// Iterates k = 1..min(K, N) maintaining P_k = sum_{i<=k} (-1)^(i+1) S_i. By
// the alternating-bound inequalities P_k is an upper bound on Pr[union A_j]
// at odd k and a lower bound at even k, so:
//   - k odd  and P_k <  1  ==> not a tautology (upper bound below 1);
//   - k even and P_k >= 1  ==> tautology;
//   - k == N: P_N is exact, decide is_tautology = (P_N >= 1) either way.
// If the loop runs out at k = K < N undecided, returns Undecided(P_K, K).
// All arithmetic is exact over numerators with denominator 2^num_vars.
SolverOutcome taut(const Formula& f, const SolverConfig& cfg = {});

// Full-depth run with no early exit: Pr[union A_j] exactly, which equals
// (number of satisfying assignments) / 2^num_vars.
Dyadic exact_union_probability(const Formula& f, const SolverConfig& cfg = {});

// The whole bound sequence P_1..P_min(K,N), no early exit.
std::vector<std::pair<int, Dyadic>> bonferroni_bounds(const Formula& f, int threshold,
                                                      const SolverConfig& cfg = {});

// CNF satisfiability via the negation: S is satisfiable iff the DNF ~S is
// not a tautology. An Undecided outcome passes through; its partial value
// then bounds Pr[~S] (upper bound at odd level, lower at even).
struct SatOutcome {
    bool decided = false;
    bool is_satisfiable = false;
    int level = 0;
    Dyadic partial;
    SolverStats stats;
};

SatOutcome solve_cnf_sat(const Formula& f, const SolverConfig& cfg = {});

} // namespace iesat
