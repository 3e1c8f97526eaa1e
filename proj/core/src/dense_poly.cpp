#include "vfilt/dense_poly.hpp"

#include "vfilt/root_poly.hpp"

#include <algorithm>
#include <sstream>

namespace vfilt {

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

DensePoly DensePoly::constant(const Rational& c) { return DensePoly(std::vector<Rational>{c}); }

DensePoly DensePoly::monomial(const Rational& c, long degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return DensePoly(std::move(v));
}

void DensePoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational DensePoly::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

DensePoly DensePoly::operator+(const DensePoly& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return DensePoly(std::move(c));
}

DensePoly DensePoly::operator-(const DensePoly& other) const {
    return *this + other.scaled(Rational(-1));
}

DensePoly DensePoly::operator*(const DensePoly& other) const {
    if (is_zero() || other.is_zero()) return DensePoly();
    std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
    return DensePoly(std::move(c));
}

DensePoly DensePoly::scaled(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return DensePoly(std::move(v));
}

DensePoly DensePoly::times_power(long k) const {
    if (is_zero()) return DensePoly();
    std::vector<Rational> v(coeffs_.size() + k, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return DensePoly(std::move(v));
}

namespace {

// All positive divisors of |z| that are <= bound, found by trial division.
// If a cofactor beyond the trial range survives, it is treated as prime; a
// composite survivor could only make us miss a root, in which case the
// caller reports "does not split" -- never a wrong factorization.
std::vector<Int> bounded_divisors(Int z, const Int& bound) {
    z = abs(z);
    std::vector<std::pair<Int, int>> factors;
    Int d(2);
    while (d * d <= z && d < 100000) {
        if (z % d == 0) {
            int e = 0;
            while (z % d == 0) {
                z /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        ++d;
    }
    if (z > 1) factors.emplace_back(z, 1);

    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factors) {
        size_t n = divs.size();
        Int pk(1);
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            if (pk > bound) break;
            for (size_t j = 0; j < n; ++j) {
                Int v = divs[j] * pk;
                if (v <= bound) divs.push_back(v);
            }
        }
        if (divs.size() > (1u << 20)) throw std::domain_error("root search: too many divisor candidates");
    }
    return divs;
}

Int eval_int_poly(const std::vector<Int>& c, const Int& x) {
    Int v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace

RootPoly DensePoly::to_root_poly() const {
    if (is_zero()) throw std::domain_error("cannot convert zero polynomial to root form");
    if (coeffs_.back() != 1) throw std::domain_error("to_root_poly requires a monic polynomial");
    if (degree() == 0) return RootPoly();

    // Substitute s = t/D with D = lcm of coefficient denominators; the result
    // is a monic integer polynomial whose roots are D times ours.
    Int den(1);
    for (const auto& c : coeffs_) {
        Int g;
        mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        den = g;
    }
    long n = degree();
    std::vector<Int> ic(n + 1);
    Int dpow(1);
    for (long i = n; i >= 0; --i) {
        Rational scaled = coeffs_[i] * Rational(dpow);
        if (scaled.get_den() != 1) throw std::logic_error("denominator clearing failed");
        ic[i] = scaled.get_num();
        dpow *= den;
    }

    RootPoly result;
    while (static_cast<long>(ic.size()) > 1) {
        Int root;
        bool found = false;
        if (ic[0] == 0) {
            root = 0;
            found = true;
        } else {
            // Cauchy bound keeps the candidate list short.
            Int bound(1);
            for (const auto& c : ic)
                if (abs(c) > bound) bound = abs(c);
            for (const Int& u : bounded_divisors(ic[0], bound + 1)) {
                if (eval_int_poly(ic, u) == 0) {
                    root = u;
                    found = true;
                    break;
                }
                Int neg = -u;
                if (eval_int_poly(ic, neg) == 0) {
                    root = neg;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw std::domain_error("polynomial does not split over Q: " + to_string());
        result *= RootPoly::linear_root(Rational(root) / Rational(den));
        // synthetic division by (t - root)
        std::vector<Int> q(ic.size() - 1);
        Int carry(0);
        for (long i = static_cast<long>(ic.size()) - 1; i >= 1; --i) {
            carry = ic[i] + carry * root;
            q[i - 1] = carry;
        }
        ic = std::move(q);
    }
    return result;
}

std::string DensePoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || i == 0) out << rational_to_string(a);
        if (i >= 1) {
            if (a != 1) out << "*";
            out << "s";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

}  // namespace vfilt
