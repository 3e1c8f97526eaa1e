#pragma once

// The b-function algebra. A BFunction is b(s) = prod_i (s + lambda_i) with
// rational lambda_i, stored through the root multiset of the polynomial
// itself. c_poly is the stable gcd
//
//   c_{p,q}(s) = gcd_{i >= 0} ( p(s+i) * prod_{j<i} q(s+j) ),
//
// computed by peeling factors of q in order of largest reachable root;
// transport computes the b-function of p(s)m from the b-function of m, both
// by the greedy chain decomposition and (as a cross-check) by the gcd
// formula b(s) * c(s+1)/c(s).

#include "vfilt/rational.hpp"
#include "vfilt/root_poly.hpp"

#include <vector>

namespace vfilt {

class BFunction {
public:
    BFunction() = default;  // degree 0, the constant 1
    explicit BFunction(RootPoly poly) : poly_(std::move(poly)) {}
    static BFunction from_lambdas(const std::vector<Rational>& lambdas);

    const RootPoly& poly() const { return poly_; }
    long degree() const { return poly_.degree(); }
    // the lambda_i with multiplicity, ascending
    std::vector<Rational> lambdas() const;
    long mult_of_lambda(const Rational& lam) const { return poly_.mult_at(lam); }

    // b_{lambda + k*sigma}(s) = b_lambda(s + k)
    BFunction shifted(long k) const { return BFunction(poly_.shifted(Rational(k))); }

    bool operator==(const BFunction&) const = default;

private:
    RootPoly poly_;
};

RootPoly c_poly(const RootPoly& p, const RootPoly& q);

// b-function of p(s)m given b = b_m, via the maximal chain decomposition:
// write b = prod (s+r_i), take the maximal (k_i) with prod [s+r_i]_{k_i}
// dividing p, and return prod (s+r_i+k_i).
BFunction transport(const BFunction& b, const RootPoly& p);

// Same quantity through b(s) * c_{p,b}(s+1) / c_{p,b}(s); the division is
// exact on the root multisets or the computation is inconsistent.
BFunction transport_via_gcd(const BFunction& b, const RootPoly& p);

}  // namespace vfilt
