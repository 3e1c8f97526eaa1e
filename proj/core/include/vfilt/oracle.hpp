#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the closed forms it checks: c_poly_bruteforce takes literal partial
// gcds of the defining sequence, p_function_greedy builds the p-function one
// offending factor at a time through Sabbah's root-location criterion, and
// jordan_weight_dim evaluates the weight-filtration convolution formula on
// an explicit matrix model of C[s]/(s+alpha)^nu.

#include "vfilt/bfunction.hpp"
#include "vfilt/rational.hpp"
#include "vfilt/root_poly.hpp"

#include <random>

namespace vfilt::oracle {

// Partial gcds g_N of p(s+i) * prod_{j<i} q(s+j) for i = 0..N, with
// N = deg p + G + 2 where G is the largest nonnegative integer difference
// between a root of p and a root of p or q. With assert_stable the oracle
// also verifies g_N = g_{N+1} = g_{N+5}.
RootPoly c_poly_bruteforce(const RootPoly& p, const RootPoly& q, bool assert_stable = false);

// Builds p inductively: while the transported b-function (computed through
// the gcd formula, never the chain closed form) has a root above -alpha,
// multiply by the corresponding linear factor. pick_largest selects the
// largest offending class representative; otherwise the choice is random
// (the result is order-independent, and the tests exercise that).
RootPoly p_function_greedy(const BFunction& b, const Rational& alpha);
RootPoly p_function_greedy_random(const BFunction& b, const Rational& alpha, std::mt19937_64& rng);

// dim W(N)_ell of C[s]/(s+alpha)^nu with N = multiplication by (s+alpha),
// from W(N)_ell = sum_{i+j=ell} ker N^{i+1} cap Im N^{-j} with kernels,
// images, intersections and sums computed as explicit subspaces of Q^nu in
// the monomial basis.
long jordan_weight_dim(long nu, const Rational& alpha, long ell);

}  // namespace vfilt::oracle
