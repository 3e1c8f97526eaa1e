#pragma once

// Monic polynomials in s that split over Q, stored as the multiset of their
// roots. This is the working representation of b-functions, p-functions and
// V-ideal generators: products, gcd, lcm, shifts and divisibility are all
// multiset operations, so they are exact and cheap. The map is keyed by root
// in ascending order, which makes structural equality coincide with
// polynomial equality.

#include "vfilt/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vfilt {

class DensePoly;

class RootPoly {
public:
    RootPoly() = default;  // the constant 1

    // (s - root)^mult
    static RootPoly linear_root(const Rational& root, long mult = 1);
    // (s + a)^mult, i.e. root -a; most formulas here are phrased this way
    static RootPoly sfactor(const Rational& a, long mult = 1);
    // [s + a]_k = (s+a)(s+a+1)...(s+a+k-1); the constant 1 for k <= 0
    static RootPoly pochhammer(const Rational& a, long k);

    const std::map<Rational, long>& roots() const { return roots_; }
    long degree() const;
    bool is_one() const { return roots_.empty(); }
    long mult_at_root(const Rational& r) const;
    // multiplicity of the factor (s + a)
    long mult_at(const Rational& a) const { return mult_at_root(Rational(-a)); }

    Rational eval(const Rational& x) const;

    RootPoly operator*(const RootPoly& other) const;
    RootPoly& operator*=(const RootPoly& other);
    bool divides(const RootPoly& other) const;  // this | other
    RootPoly exact_div(const RootPoly& divisor) const;

    static RootPoly gcd(const RootPoly& p, const RootPoly& q);
    static RootPoly lcm(const RootPoly& p, const RootPoly& q);

    // p(s + a); each factor (s + c) becomes (s + c + a)
    RootPoly shifted(const Rational& a) const;

    DensePoly expand() const;
    // Coefficients of p in the basis {(s + alpha)^i}, lowest first.
    std::vector<Rational> expand_at(const Rational& alpha) const;

    // "(s+1)(s+2)^2", "s(s-1)", "1"
    std::string to_string() const;

    bool operator==(const RootPoly&) const = default;

private:
    std::map<Rational, long> roots_;
};

}  // namespace vfilt
