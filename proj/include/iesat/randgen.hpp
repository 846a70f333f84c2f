#pragma once

#include "iesat/formula.hpp"

#include <cstdint>
#include <random>

namespace iesat {

// Generator identifier recorded in --version and run logs. mt19937_64 is
// fully pinned by the C++ standard; the bounded draw below uses rejection
// sampling on raw engine output, so the stream is identical on every
// platform. Bump the suffix if the draw procedure ever changes.
inline constexpr const char* kPrngId = "mt19937_64-rejection/1";

// Deterministic PRNG with portable bounded draws (std distributions are
// implementation-defined and would break cross-platform reproducibility).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return engine_() >> 63; }

private:
    std::mt19937_64 engine_;
};

// Pure function of (seed, index): splitmix64 finalizer applied to the seed
// advanced by index+1 steps of the splitmix increment. Gives every trial in
// a batch an independent, reproducible stream regardless of execution order.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Parameters for the random normal-form generator: num_clauses clauses over
// num_vars variables, each clause built from clause_width literals on
// distinct variables with independent uniform signs.
struct GenSpec {
    int num_vars = 0;
    int num_clauses = 0;
    int clause_width = 3;
    std::uint64_t seed = 0;
};

// Deterministic for a fixed (spec, kind). Clauses always contain exactly
// clause_width distinct variables, so none is self-contradictory.
// Throws InvalidSpecError unless 1 <= clause_width <= num_vars and
// num_clauses >= 0.
Formula rand_nf(const GenSpec& spec, Kind kind = Kind::dnf);

} // namespace iesat
