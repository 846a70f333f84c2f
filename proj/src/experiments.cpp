#include "iesat/experiments.hpp"

#include "iesat/lll.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>
#include <thread>

namespace iesat {

const char* outcome_name(TrialRecord::Outcome o) {
    switch (o) {
        case TrialRecord::Outcome::taut: return "taut";
        case TrialRecord::Outcome::nontaut: return "nontaut";
        case TrialRecord::Outcome::undecided: return "undecided";
        case TrialRecord::Outcome::limit: return "limit";
    }
    return "?";
}

namespace {

void validate(const BatchParams& p) {
    if (p.trials < 1) throw InvalidSpecError("trial count must be >= 1");
}

// Runs body(t) for t in [0, trials), fanning out across p.jobs threads.
// Each index is handled exactly once; bodies must write only to their own
// slot so the result is schedule-independent.
template <typename Body>
void for_each_trial(int trials, int jobs, Body&& body) {
    jobs = std::max(1, std::min(jobs, trials));
    if (jobs == 1) {
        for (int t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&] {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) body(t);
        });
    }
    for (std::thread& t : threads) t.join();
}

SolverConfig trial_config(const BatchParams& p) {
    SolverConfig cfg;
    cfg.threshold = p.threshold;
    cfg.max_table_entries = p.max_table_entries;
    cfg.time_budget = p.time_budget;
    cfg.jobs = 1; // parallelism is spent across trials
    return cfg;
}

} // namespace

std::vector<TrialRecord> meta_taut(const BatchParams& p) {
    validate(p);
    const SolverConfig cfg = trial_config(p);
    std::vector<TrialRecord> records(static_cast<std::size_t>(p.trials));
    for_each_trial(p.trials, p.jobs, [&](int t) {
        TrialRecord& r = records[static_cast<std::size_t>(t)];
        r.trial = t;
        r.seed = derive_subseed(p.seed, static_cast<std::uint64_t>(t));
        r.num_vars = p.num_vars;
        r.num_clauses = p.num_clauses;
        r.clause_width = p.clause_width;
        r.threshold = p.threshold;
        const Formula f = rand_nf(
            {p.num_vars, p.num_clauses, p.clause_width, r.seed}, Kind::dnf);
        try {
            const SolverOutcome o = taut(f, cfg);
            r.outcome = !o.decided            ? TrialRecord::Outcome::undecided
                        : o.is_tautology      ? TrialRecord::Outcome::taut
                                              : TrialRecord::Outcome::nontaut;
            r.decision_level = o.level;
            r.wall = o.stats.wall;
            r.terms_evaluated = o.stats.terms_evaluated;
            r.table_peak = o.stats.table_peak;
        } catch (const ResourceLimitError& e) {
            r.outcome = TrialRecord::Outcome::limit;
            r.decision_level = e.level_completed;
        }
    });
    return records;
}

SweepPoint how_many_finished(const BatchParams& p) {
    const std::vector<TrialRecord> records = meta_taut(p);
    SweepPoint point;
    point.num_vars = p.num_vars;
    point.num_clauses = p.num_clauses;
    point.threshold = p.threshold;
    point.clause_width = p.clause_width;
    point.trials = p.trials;
    for (const TrialRecord& r : records) point.conclusive += r.conclusive();
    return point;
}

std::vector<SweepPoint> phase_sweep(const BatchParams& p, int clauses_from,
                                    int clauses_to, int clauses_step) {
    validate(p);
    if (clauses_from > clauses_to) {
        throw InvalidSpecError("clause range start exceeds end");
    }
    if (clauses_step < 1) throw InvalidSpecError("clause range step must be >= 1");

    std::vector<SweepPoint> points;
    for (int n_clauses = clauses_from; n_clauses <= clauses_to;
         n_clauses += clauses_step) {
        BatchParams q = p;
        q.num_clauses = n_clauses;
        q.seed = derive_subseed(p.seed, static_cast<std::uint64_t>(n_clauses));
        points.push_back(how_many_finished(q));
    }
    return points;
}

MetaLllSummary meta_lll(const BatchParams& p, std::vector<LllTrialRow>* rows) {
    validate(p);
    SolverConfig cfg = trial_config(p);
    cfg.threshold = std::max(1, p.num_clauses); // full depth: always decides

    std::vector<LllTrialRow> local(static_cast<std::size_t>(p.trials));
    for_each_trial(p.trials, p.jobs, [&](int t) {
        LllTrialRow& r = local[static_cast<std::size_t>(t)];
        r.trial = t;
        r.seed = derive_subseed(p.seed, static_cast<std::uint64_t>(t));
        const Formula f = rand_nf(
            {p.num_vars, p.num_clauses, p.clause_width, r.seed}, Kind::dnf);
        const DependencyGraph g = dnf_to_pg(f);
        r.detected_sym = lll_symmetric(g);
        r.detected_asym = lll_asymmetric(g);
        try {
            r.actual_nontaut = !taut(f, cfg).is_tautology;
        } catch (const ResourceLimitError&) {
            r.actual_nontaut = std::nullopt;
        }
    });

    MetaLllSummary s;
    s.trials = p.trials;
    for (const LllTrialRow& r : local) {
        if (!r.actual_nontaut) {
            ++s.excluded;
            continue;
        }
        if (*r.actual_nontaut) {
            ++s.actual_nontaut;
            s.detected_sym += r.detected_sym;
            s.detected_asym += r.detected_asym;
        }
    }
    if (rows) *rows = std::move(local);
    return s;
}

namespace {

// Shortest decimal that round-trips; counts are small so this is stable.
std::string decimal(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

} // namespace

void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial,seed,n,N,M,K,outcome,decision_level,wall_us,terms,table_peak\n";
    for (const TrialRecord& r : records) {
        out << r.trial << ',' << r.seed << ',' << r.num_vars << ',' << r.num_clauses
            << ',' << r.clause_width << ',' << r.threshold << ','
            << outcome_name(r.outcome) << ',' << r.decision_level << ','
            << r.wall.count() << ',' << r.terms_evaluated << ',' << r.table_peak
            << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << "n,N,k,M,trials,conclusive,proportion\n";
    for (const SweepPoint& p : points) {
        out << p.num_vars << ',' << p.num_clauses << ',' << p.threshold << ','
            << p.clause_width << ',' << p.trials << ',' << p.conclusive << ','
            << decimal(p.proportion()) << '\n';
    }
}

void write_lll_csv(std::ostream& out, const std::vector<LllTrialRow>& rows) {
    out << "trial,seed,sym,asym,actual_nontaut\n";
    for (const LllTrialRow& r : rows) {
        out << r.trial << ',' << r.seed << ',' << int(r.detected_sym) << ','
            << int(r.detected_asym) << ',';
        if (r.actual_nontaut) {
            out << int(*r.actual_nontaut);
        } else {
            out << "na";
        }
        out << '\n';
    }
}

} // namespace iesat
