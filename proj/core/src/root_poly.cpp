#include "vfilt/root_poly.hpp"

#include "vfilt/dense_poly.hpp"

#include <algorithm>
#include <sstream>

namespace vfilt {

RootPoly RootPoly::linear_root(const Rational& root, long mult) {
    RootPoly p;
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult > 0) p.roots_[root] = mult;
    return p;
}

RootPoly RootPoly::sfactor(const Rational& a, long mult) {
    return linear_root(Rational(-a), mult);
}

RootPoly RootPoly::pochhammer(const Rational& a, long k) {
    RootPoly p;
    for (long i = 0; i < k; ++i) p *= sfactor(a + i);
    return p;
}

long RootPoly::degree() const {
    long d = 0;
    for (const auto& [r, m] : roots_) d += m;
    return d;
}

long RootPoly::mult_at_root(const Rational& r) const {
    auto it = roots_.find(r);
    return it == roots_.end() ? 0 : it->second;
}

Rational RootPoly::eval(const Rational& x) const {
    Rational v(1);
    for (const auto& [r, m] : roots_) {
        Rational factor = x - r;
        for (long i = 0; i < m; ++i) v *= factor;
    }
    return v;
}

RootPoly RootPoly::operator*(const RootPoly& other) const {
    RootPoly p = *this;
    p *= other;
    return p;
}

RootPoly& RootPoly::operator*=(const RootPoly& other) {
    for (const auto& [r, m] : other.roots_) roots_[r] += m;
    return *this;
}

bool RootPoly::divides(const RootPoly& other) const {
    for (const auto& [r, m] : roots_)
        if (other.mult_at_root(r) < m) return false;
    return true;
}

RootPoly RootPoly::exact_div(const RootPoly& divisor) const {
    RootPoly q = *this;
    for (const auto& [r, m] : divisor.roots_) {
        auto it = q.roots_.find(r);
        if (it == q.roots_.end() || it->second < m)
            throw std::domain_error("exact_div: " + divisor.to_string() +
                                    " does not divide " + to_string());
        it->second -= m;
        if (it->second == 0) q.roots_.erase(it);
    }
    return q;
}

RootPoly RootPoly::gcd(const RootPoly& p, const RootPoly& q) {
    RootPoly g;
    for (const auto& [r, m] : p.roots_) {
        long k = std::min(m, q.mult_at_root(r));
        if (k > 0) g.roots_[r] = k;
    }
    return g;
}

RootPoly RootPoly::lcm(const RootPoly& p, const RootPoly& q) {
    RootPoly l = p;
    for (const auto& [r, m] : q.roots_) {
        long& cur = l.roots_[r];
        cur = std::max(cur, m);
    }
    return l;
}

RootPoly RootPoly::shifted(const Rational& a) const {
    RootPoly p;
    for (const auto& [r, m] : roots_) p.roots_[Rational(r - a)] = m;
    return p;
}

DensePoly RootPoly::expand() const {
    std::vector<Rational> c{Rational(1)};
    for (const auto& [r, m] : roots_) {
        for (long i = 0; i < m; ++i) {
            // multiply by (s - r)
            std::vector<Rational> next(c.size() + 1, Rational(0));
            for (size_t j = 0; j < c.size(); ++j) {
                next[j] -= c[j] * r;
                next[j + 1] += c[j];
            }
            c = std::move(next);
        }
    }
    return DensePoly(std::move(c));
}

std::vector<Rational> RootPoly::expand_at(const Rational& alpha) const {
    // p(s) = q(u) with u = s + alpha, so q(u) = p(u - alpha): shift roots up.
    return shifted(Rational(-alpha)).expand().coeffs();
}

std::string RootPoly::to_string() const {
    if (roots_.empty()) return "1";
    std::ostringstream out;
    // Iterate in descending root order so factors read (s+1)(s+2)...
    for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) {
        const Rational a = -it->first;
        if (a == 0)
            out << "s";
        else if (a > 0)
            out << "(s+" << rational_to_string(a) << ")";
        else
            out << "(s" << rational_to_string(a) << ")";
        if (it->second > 1) out << "^" << it->second;
    }
    return out.str();
}

}  // namespace vfilt
