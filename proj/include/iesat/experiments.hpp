#pragma once

#include "iesat/ie_solver.hpp"
#include "iesat/randgen.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace iesat {

// One taut run on one random DNF. outcome "limit" marks a trial whose solver
// run tripped a resource cap; its decision_level is the last completed level.
struct TrialRecord {
    enum class Outcome { taut, nontaut, undecided, limit };

    int trial = 0;
    std::uint64_t seed = 0; // sub-seed actually fed to the generator
    int num_vars = 0;
    int num_clauses = 0;
    int clause_width = 0;
    int threshold = 0;
    Outcome outcome = Outcome::undecided;
    int decision_level = 0;
    std::chrono::microseconds wall{0};
    std::uint64_t terms_evaluated = 0;
    std::size_t table_peak = 0;

    bool conclusive() const {
        return outcome == Outcome::taut || outcome == Outcome::nontaut;
    }
};

const char* outcome_name(TrialRecord::Outcome o);

struct BatchParams {
    int num_vars = 0;
    int num_clauses = 0;
    int clause_width = 3;
    int threshold = 1;
    int trials = 1;
    std::uint64_t seed = 0;
    int jobs = 1; // worker threads across trials; results identical at any setting
    std::optional<std::size_t> max_table_entries;
    std::optional<std::chrono::milliseconds> time_budget;
};

// Runs taut on `trials` random DNFs, trial t seeded with
// derive_subseed(seed, t). Per-trial resource-limit errors become "limit"
// rows rather than propagating. Records come back in trial order no matter
// how execution was scheduled.
std::vector<TrialRecord> meta_taut(const BatchParams& p);

// One point of the success-probability curve.
struct SweepPoint {
    int num_vars = 0;
    int num_clauses = 0;
    int threshold = 0;
    int clause_width = 3;
    int trials = 0;
    int conclusive = 0;

    double proportion() const {
        return trials == 0 ? 0.0 : static_cast<double>(conclusive) / trials;
    }
};

// Proportion of trials decided at the given threshold.
SweepPoint how_many_finished(const BatchParams& p);

// how_many_finished for each N in [from, to] stepping by `step`; point N gets
// the sub-stream derive_subseed(p.seed, N) so a point's data does not move
// when the range around it changes. p.num_clauses is ignored.
std::vector<SweepPoint> phase_sweep(const BatchParams& p, int clauses_from,
                                    int clauses_to, int clauses_step);

// One LLL trial: both variant verdicts plus ground truth from a full-depth
// taut run (threshold = N always decides). ground truth is empty when the
// full-depth run tripped a resource cap; such trials are excluded from the
// proportions and counted.
struct LllTrialRow {
    int trial = 0;
    std::uint64_t seed = 0;
    bool detected_sym = false;
    bool detected_asym = false;
    std::optional<bool> actual_nontaut;
};

struct MetaLllSummary {
    int trials = 0;
    int excluded = 0;       // ground truth unavailable (resource limit)
    int actual_nontaut = 0; // out of trials - excluded
    int detected_sym = 0;   // out of actual_nontaut
    int detected_asym = 0;

    // Detection rates over the trials that really are non-tautologies.
    double prop_detected_sym() const {
        return actual_nontaut == 0 ? 0.0
                                   : static_cast<double>(detected_sym) / actual_nontaut;
    }
    double prop_detected_asym() const {
        return actual_nontaut == 0 ? 0.0
                                   : static_cast<double>(detected_asym) / actual_nontaut;
    }
    double prop_actual_nontaut() const {
        const int counted = trials - excluded;
        return counted == 0 ? 0.0 : static_cast<double>(actual_nontaut) / counted;
    }
};

// p.threshold is ignored (ground truth always runs at full depth).
MetaLllSummary meta_lll(const BatchParams& p, std::vector<LllTrialRow>* rows = nullptr);

// CSV emission. Header row first, LF line endings, one record per line.
// Schemas:
//   trials: trial,seed,n,N,M,K,outcome,decision_level,wall_us,terms,table_peak
//   sweep:  n,N,k,M,trials,conclusive,proportion
//   lll:    trial,seed,sym,asym,actual_nontaut
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points);
void write_lll_csv(std::ostream& out, const std::vector<LllTrialRow>& rows);

} // namespace iesat
