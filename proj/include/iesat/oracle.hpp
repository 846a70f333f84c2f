#pragma once

#include "iesat/formula.hpp"

#include <cstdint>

namespace iesat {

// Enumeration ceiling for the brute-force oracle. The default keeps a worst
// case run (2^24 evaluations) in the seconds range; raise it explicitly if
// you can wait. Anything above 63 is rejected outright.
struct OracleLimits {
    int max_vars = 24;
};

// Number of assignments (out of 2^num_vars) satisfying f, by full
// enumeration. Throws TooLargeError when num_vars exceeds the limit; never
// silently samples.
std::uint64_t count_satisfying(const Formula& f, const OracleLimits& limits = {});

// count_satisfying(f) == 2^n. Requires a DNF.
bool is_tautology_bruteforce(const Formula& f, const OracleLimits& limits = {});

// count_satisfying(f) > 0. Requires a CNF.
bool is_satisfiable_bruteforce(const Formula& f, const OracleLimits& limits = {});

} // namespace iesat
