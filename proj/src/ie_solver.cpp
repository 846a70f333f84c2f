#include "iesat/ie_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <thread>

namespace iesat {

namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

std::uint64_t hash_key(std::span<const Lit> lits, std::uint32_t max_index) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a over literals
    for (Lit lit : lits) {
        h ^= static_cast<std::uint32_t>(lit);
        h *= 1099511628211ULL;
    }
    h ^= 0x9e3779b97f4a7c15ULL + max_index;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

void saturating_add(std::uint64_t& acc, const BigInt& amount) {
    if (amount > std::numeric_limits<std::uint64_t>::max() - acc) {
        acc = std::numeric_limits<std::uint64_t>::max();
    } else {
        acc += amount.convert_to<std::uint64_t>();
    }
}

} // namespace

BigInt LevelTable::total_multiplicity() const {
    BigInt total = 0;
    for (const Entry& e : entries_) total += e.multiplicity;
    return total;
}

void LevelTable::insert(std::span<const Lit> lits, std::uint32_t max_index,
                        const BigInt& multiplicity) {
    // Grow the probe table at 50% load; reinsert by stored hashes.
    if (slots_.size() < 2 * (entries_.size() + 1)) {
        std::size_t cap = std::bit_ceil(4 * (entries_.size() + 1));
        if (cap < 64) cap = 64;
        slots_.assign(cap, 0);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            std::size_t idx = hashes_[i] & (cap - 1);
            while (slots_[idx] != 0) idx = (idx + 1) & (cap - 1);
            slots_[idx] = static_cast<std::uint32_t>(i) + 1;
        }
    }

    const std::uint64_t h = hash_key(lits, max_index);
    const std::size_t mask = slots_.size() - 1;
    std::size_t idx = h & mask;
    while (slots_[idx] != 0) {
        const std::size_t i = slots_[idx] - 1;
        Entry& e = entries_[i];
        if (hashes_[i] == h && e.max_index == max_index && e.length == lits.size() &&
            std::equal(lits.begin(), lits.end(), pool_.begin() + static_cast<std::ptrdiff_t>(e.offset))) {
            e.multiplicity += multiplicity;
            return;
        }
        idx = (idx + 1) & mask;
    }

    slots_[idx] = static_cast<std::uint32_t>(entries_.size()) + 1;
    hashes_.push_back(h);
    Entry e;
    e.offset = pool_.size();
    e.length = static_cast<std::uint32_t>(lits.size());
    e.max_index = max_index;
    e.multiplicity = multiplicity;
    pool_.insert(pool_.end(), lits.begin(), lits.end());
    entries_.push_back(std::move(e));
}

namespace {

BigInt term_numerator_of(const LevelTable& t, unsigned num_vars) {
    BigInt sum = 0;
    for (const LevelTable::Entry& e : t.entries()) {
        sum += e.multiplicity << (num_vars - e.length);
    }
    return sum;
}

std::vector<char> consistent_flags(const Formula& f) {
    std::vector<char> flags(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) flags[j] = f.clauses()[j].consistent();
    return flags;
}

[[noreturn]] void throw_limit(const char* what, int level_completed) {
    throw ResourceLimitError(std::string(what) + " while expanding past level " +
                                 std::to_string(level_completed),
                             level_completed);
}

// Expands entries [begin, end) of `from` into `out`. Checks the entry cap
// after every insert and the deadline every few thousand merges; a trip in
// any worker raises `abort` so siblings bail out quickly.
void expand_range(const LevelTable& from, const Formula& f,
                  const std::vector<char>& consistent, std::size_t begin,
                  std::size_t end, LevelTable& out,
                  const std::optional<std::size_t>& cap, const Deadline& deadline,
                  std::atomic<bool>& abort) {
    const auto num_clauses = static_cast<std::uint32_t>(f.size());
    std::vector<Lit> scratch;
    std::uint32_t ticker = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const LevelTable::Entry& e = from.entries()[i];
        const std::span<const Lit> base = from.lits(e);
        for (std::uint32_t j = e.max_index; j < num_clauses; ++j) {
            // j is a 0-based candidate index; entry max_index is 1-based, so
            // starting at e.max_index means "strictly larger clause index".
            if (!consistent[j]) continue;
            if ((++ticker & 0x1fff) == 0) {
                if (abort.load(std::memory_order_relaxed)) return;
                if (deadline && Clock::now() > *deadline) {
                    abort.store(true, std::memory_order_relaxed);
                    throw_limit("time budget exhausted", from.level());
                }
            }
            if (!merge_into(base, f.clauses()[j].lits(), scratch)) continue;
            out.insert(scratch, j + 1, e.multiplicity);
            if (cap && out.size() > *cap) {
                abort.store(true, std::memory_order_relaxed);
                throw_limit("table entry cap exceeded", from.level());
            }
        }
    }
}

LevelTable expand_table(const LevelTable& from, const Formula& f,
                        const SolverConfig& cfg, const Deadline& deadline) {
    const std::vector<char> consistent = consistent_flags(f);
    std::atomic<bool> abort{false};

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || from.size() < 2048) {
        LevelTable next(from.level() + 1);
        expand_range(from, f, consistent, 0, from.size(), next,
                     cfg.max_table_entries, deadline, abort);
        return next;
    }

    // Each worker fills a private table from a contiguous slice of entries;
    // the merge below re-aggregates. Aggregation is exact integer addition,
    // so the result is independent of the partitioning.
    const std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(jobs), from.size());
    std::vector<LevelTable> locals(parts, LevelTable(from.level() + 1));
    std::vector<std::exception_ptr> errors(parts);
    std::vector<std::thread> threads;
    threads.reserve(parts);
    const std::size_t chunk = (from.size() + parts - 1) / parts;
    for (std::size_t w = 0; w < parts; ++w) {
        threads.emplace_back([&, w] {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(from.size(), lo + chunk);
            try {
                expand_range(from, f, consistent, lo, hi, locals[w],
                             cfg.max_table_entries, deadline, abort);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& err : errors) {
        if (err) std::rethrow_exception(err);
    }

    LevelTable next = std::move(locals[0]);
    for (std::size_t w = 1; w < parts; ++w) {
        for (const LevelTable::Entry& e : locals[w].entries()) {
            next.insert(locals[w].lits(e), e.max_index, e.multiplicity);
            if (cfg.max_table_entries && next.size() > *cfg.max_table_entries) {
                throw_limit("table entry cap exceeded", from.level());
            }
        }
    }
    return next;
}

} // namespace

Expansion build_level1(const Formula& f) {
    const auto n = static_cast<unsigned>(f.num_vars());
    LevelTable table(1);
    for (std::size_t j = 0; j < f.size(); ++j) {
        const Clause& c = f.clauses()[j];
        if (!c.consistent()) continue; // probability 0; never joins the table
        table.insert(c.lits(), static_cast<std::uint32_t>(j) + 1, 1);
    }
    BigInt term = term_numerator_of(table, n);
    return {std::move(table), std::move(term)};
}

Expansion level_expand(const LevelTable& table, const Formula& f, const SolverConfig& cfg) {
    Deadline deadline;
    if (cfg.time_budget) deadline = Clock::now() + *cfg.time_budget;
    LevelTable next = expand_table(table, f, cfg, deadline);
    BigInt term = term_numerator_of(next, static_cast<unsigned>(f.num_vars()));
    return {std::move(next), std::move(term)};
}

namespace {

// Shared driver for taut / bonferroni_bounds / exact_union_probability.
// Calls on_level(k, P_k numerator, table) after each level's sum lands and
// stops early when it returns true. Converts cap/time trips into
// ResourceLimitError carrying the last complete bound.
struct LevelDriver {
    const Formula& f;
    const SolverConfig& cfg;
    SolverStats stats;
    BigInt p_num = 0;
    BigInt two_n;
    int last_level = 0;

    explicit LevelDriver(const Formula& f, const SolverConfig& cfg)
        : f(f), cfg(cfg), two_n(BigInt(1) << f.num_vars()) {}

    template <typename OnLevel>
    void run(int max_level, OnLevel&& on_level) {
        const auto start = Clock::now();
        Deadline deadline;
        if (cfg.time_budget) deadline = start + *cfg.time_budget;

        Expansion cur;
        try {
            for (int k = 1; k <= max_level; ++k) {
                cur = (k == 1) ? build_level1(f)
                               : Expansion{expand_table(cur.table, f, cfg, deadline),
                                           BigInt(0)};
                if (k > 1) {
                    cur.term_numerator =
                        term_numerator_of(cur.table, static_cast<unsigned>(f.num_vars()));
                }
                if (k % 2 == 1) {
                    p_num += cur.term_numerator;
                } else {
                    p_num -= cur.term_numerator;
                }
                saturating_add(stats.terms_evaluated, cur.table.total_multiplicity());
                stats.table_peak = std::max(stats.table_peak, cur.table.size());
                last_level = k;
                if (on_level(k, cur.table)) break;
                if (cfg.max_table_entries && cur.table.size() > *cfg.max_table_entries) {
                    throw_limit("table entry cap exceeded", k);
                }
            }
        } catch (const ResourceLimitError& e) {
            stats.wall = std::chrono::duration_cast<std::chrono::microseconds>(
                Clock::now() - start);
            throw ResourceLimitError(
                e.what(), e.level_completed,
                Dyadic(p_num, static_cast<unsigned>(f.num_vars())));
        }
        stats.wall =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    }

    Dyadic partial() const { return Dyadic(p_num, static_cast<unsigned>(f.num_vars())); }
};

void require_dnf(const Formula& f, const char* op) {
    if (f.kind() != Kind::dnf) {
        throw KindError(std::string(op) + " expects a DNF, got a CNF");
    }
}

void require_threshold(int threshold) {
    if (threshold < 1) throw InvalidSpecError("threshold must be >= 1");
}

} // namespace

SolverOutcome taut(const Formula& f, const SolverConfig& cfg) {
    require_dnf(f, "taut");
    require_threshold(cfg.threshold);

    const auto num_clauses = static_cast<int>(f.size());
    LevelDriver driver(f, cfg);
    if (num_clauses == 0) {
        // No clauses: the union probability is exactly 0.
        return SolverOutcome::make_decided(false, 0, driver.partial(), driver.stats);
    }

    const int max_level = std::min(cfg.threshold, num_clauses);
    std::optional<bool> verdict;
    int decided_at = 0;
    driver.run(max_level, [&](int k, const LevelTable&) {
        const int cmp = driver.p_num.compare(driver.two_n);
        if (k % 2 == 1 && cmp < 0) {
            verdict = false; // upper bound already below 1
        } else if (k % 2 == 0 && cmp >= 0) {
            verdict = true; // lower bound already at least 1
        } else if (k == num_clauses) {
            verdict = (cmp >= 0); // P_N is exact
        }
        if (verdict) decided_at = k;
        return verdict.has_value();
    });

    if (verdict) {
        return SolverOutcome::make_decided(*verdict, decided_at, driver.partial(),
                                           driver.stats);
    }
    return SolverOutcome::make_undecided(max_level, driver.partial(), driver.stats);
}

std::vector<std::pair<int, Dyadic>> bonferroni_bounds(const Formula& f, int threshold,
                                                      const SolverConfig& cfg) {
    require_dnf(f, "bonferroni_bounds");
    require_threshold(threshold);

    std::vector<std::pair<int, Dyadic>> bounds;
    LevelDriver driver(f, cfg);
    const int max_level = std::min(threshold, static_cast<int>(f.size()));
    driver.run(max_level, [&](int k, const LevelTable&) {
        bounds.emplace_back(k, driver.partial());
        return false;
    });
    return bounds;
}

Dyadic exact_union_probability(const Formula& f, const SolverConfig& cfg) {
    require_dnf(f, "exact_union_probability");
    if (f.size() == 0) return Dyadic::zero(static_cast<unsigned>(f.num_vars()));

    LevelDriver driver(f, cfg);
    driver.run(static_cast<int>(f.size()), [](int, const LevelTable&) { return false; });
    return driver.partial();
}

SatOutcome solve_cnf_sat(const Formula& f, const SolverConfig& cfg) {
    if (f.kind() != Kind::cnf) throw KindError("solve_cnf_sat expects a CNF");
    const SolverOutcome o = taut(negate_cnf_to_dnf(f), cfg);
    SatOutcome s;
    s.decided = o.decided;
    s.is_satisfiable = o.decided ? !o.is_tautology : false;
    s.level = o.level;
    s.partial = o.partial;
    s.stats = o.stats;
    return s;
}

} // namespace iesat
