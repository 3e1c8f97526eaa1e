#pragma once

// Coefficient-vector polynomials over Q, lowest degree first. Used for span
// bases (V cap F), the h(s) membership solve, and (s+alpha)-expansions; the
// root-multiset form stays the primary representation everywhere else.

#include "vfilt/rational.hpp"

#include <string>
#include <vector>

namespace vfilt {

class RootPoly;

class DensePoly {
public:
    DensePoly() = default;  // zero polynomial
    explicit DensePoly(std::vector<Rational> coeffs);
    static DensePoly constant(const Rational& c);
    static DensePoly monomial(const Rational& c, long degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long i) const;

    Rational eval(const Rational& x) const;  // Horner

    DensePoly operator+(const DensePoly& other) const;
    DensePoly operator-(const DensePoly& other) const;
    DensePoly operator*(const DensePoly& other) const;
    DensePoly scaled(const Rational& c) const;

    // Multiply by s^k.
    DensePoly times_power(long k) const;

    // Exact factorization into rational linear factors. The input must be
    // monic; throws std::domain_error if it is not, or if it does not split
    // over Q.
    RootPoly to_root_poly() const;

    std::string to_string() const;  // "1 - s + 2*s^3"

    bool operator==(const DensePoly&) const = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace vfilt
