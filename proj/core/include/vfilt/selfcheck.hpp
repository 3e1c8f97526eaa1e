#pragma once

// The invariant suite behind `vfilt check`: every structural identity the
// library promises, run against randomized corpora and the brute-force
// oracles. A failure here means the build is mathematically inconsistent.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vfilt {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first counterexample or error text
};

// cases scales the randomized corpora (500 matches the documented suite).
std::vector<CheckResult> run_selfcheck(std::uint64_t seed, long cases,
                                       std::ostream* progress = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace vfilt
