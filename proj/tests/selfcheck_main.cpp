// Runs the full invariant suite at a reduced case count; `vfilt check` runs
// the same suite from the command line.

#include "vfilt/selfcheck.hpp"

#include <iostream>

int main() {
    auto results = vfilt::run_selfcheck(20250808, 120, &std::cout);
    return vfilt::all_passed(results) ? 0 : 1;
}
