#pragma once

#include "vfilt/bfunction.hpp"
#include "vfilt/rational.hpp"
#include "vfilt/root_poly.hpp"

#include <vector>

namespace vfilt::test {

inline Rational Q(const char* s) { return rational_from_string(s); }
inline Rational Q(long n) { return Rational(n); }
inline Rational Q(int n) { return Rational(n); }

// prod (s + a_i)
inline RootPoly splus(const std::vector<Rational>& as) {
    RootPoly p;
    for (const auto& a : as) p *= RootPoly::sfactor(a);
    return p;
}

inline BFunction bf(const std::vector<Rational>& lambdas) {
    return BFunction::from_lambdas(lambdas);
}

}  // namespace vfilt::test
