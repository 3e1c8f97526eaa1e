#include "vfilt/affine_family.hpp"

#include <set>
#include <sstream>

namespace vfilt {

BFunction AffineBFamily::eval(std::span<const long> a) const {
    if (!valid_coordinates(a))
        throw std::invalid_argument("invalid semigroup coordinates for family '" + name + "'");
    RootPoly poly;
    for (long i = 0; i < d; ++i) {
        Rational lam = r[i];
        for (long j = 0; j < generators; ++j) lam += c[i][j] * Rational(a[j]);
        poly *= RootPoly::sfactor(lam);
    }
    return BFunction(std::move(poly));
}

bool AffineBFamily::valid_coordinates(std::span<const long> a) const {
    if (static_cast<long>(a.size()) != generators) return false;
    for (long j = 0; j < generators; ++j)
        if (j != sigma_index && a[j] < 0) return false;
    return true;
}

void AffineBFamily::validate() const {
    std::ostringstream err;
    if (d <= 0 || generators <= 0)
        throw std::invalid_argument("family '" + name + "': d and generators must be positive");
    if (sigma_index < 0 || sigma_index >= generators)
        throw std::invalid_argument("family '" + name + "': sigma_index out of range");
    if (static_cast<long>(degrees.size()) != generators)
        throw std::invalid_argument("family '" + name + "': degrees must have one entry per generator");
    if (static_cast<long>(r.size()) != d)
        throw std::invalid_argument("family '" + name + "': r must have d entries");
    if (static_cast<long>(c.size()) != d)
        throw std::invalid_argument("family '" + name + "': c must have d rows");
    for (long i = 0; i < d; ++i) {
        if (static_cast<long>(c[i].size()) != generators)
            throw std::invalid_argument("family '" + name + "': c rows must have one entry per generator");
        for (long j = 0; j < generators; ++j) {
            if (c[i][j] < 0 || c[i][j] > degrees[j]) {
                err << "family '" << name << "': c[" << i + 1 << "][" << j + 1 << "] = "
                    << rational_to_string(c[i][j]) << " outside [0, deg h_" << j + 1 << "] = [0, "
                    << degrees[j] << "]";
                throw std::invalid_argument(err.str());
            }
        }
        // b_{lambda+sigma}(s) = b_lambda(s+1) forces the sigma column to 1.
        if (c[i][sigma_index] != 1) {
            err << "family '" << name << "': sigma column of c must be all ones (row " << i + 1
                << " has " << rational_to_string(c[i][sigma_index]) << "); the shift law fails";
            throw std::invalid_argument(err.str());
        }
    }
}

long AffineBFamily::integer_class_count(const Rational& alpha, std::span<const long> a) const {
    long count = 0;
    for (const auto& lam : eval(a).lambdas())
        if (is_integer(Rational(lam - alpha))) ++count;
    return count;
}

namespace {

std::multiset<Rational> class_signature(const AffineBFamily& fam, std::span<const long> a) {
    std::multiset<Rational> sig;
    for (const auto& lam : fam.eval(a).lambdas()) sig.insert(Rational(lam - floor_int(lam)));
    return sig;
}

}  // namespace

void AffineBFamily::validate_class_constancy(const std::vector<std::vector<long>>& samples) const {
    std::vector<long> origin(generators, 0);
    const std::multiset<Rational> reference = class_signature(*this, origin);
    for (const auto& a : samples) {
        if (class_signature(*this, a) != reference) {
            std::ostringstream msg;
            msg << "family '" << name << "': the integer-class structure of the roots moves with "
                << "the weight (violated at a = (";
            for (size_t j = 0; j < a.size(); ++j) msg << (j ? "," : "") << a[j];
            msg << ")); the c matrix does not define a consistent family";
            throw std::invalid_argument(msg.str());
        }
    }
}

SymmetryReport check_symmetry(const AffineBFamily& fam, long n, const DualMap& dual,
                              const std::vector<std::vector<long>>& samples) {
    SymmetryReport report;
    const Rational offset = Rational(n) / Rational(fam.d) + 1;  // n/d + 1
    for (const auto& a : samples) {
        std::vector<long> astar = dual(a);
        if (!fam.valid_coordinates(astar)) {
            report.pass = false;
            report.counterexample = a;
            report.detail = "dual image has invalid coordinates";
            return report;
        }
        // b_lambda(s) = (-1)^d b_{lambda*}(-s - n/d - 1) says exactly that
        // the lambda multiset of b_{lambda*} is {n/d + 1 - lambda_i}.
        RootPoly lhs = fam.eval(a).poly();
        RootPoly rhs;
        for (const auto& mu : fam.eval(astar).lambdas()) rhs *= RootPoly::sfactor(offset - mu);
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample = a;
            report.detail = "b = " + lhs.to_string() + " but reflected dual gives " + rhs.to_string();
            return report;
        }
    }
    return report;
}

std::vector<std::vector<long>> sample_coordinates(const AffineBFamily& fam, long radius, long count,
                                                  std::mt19937_64& rng) {
    std::vector<std::vector<long>> out;
    out.emplace_back(fam.generators, 0);
    std::uniform_int_distribution<long> nonneg(0, radius);
    std::uniform_int_distribution<long> any(-radius, radius);
    for (long i = 1; i < count; ++i) {
        std::vector<long> a(fam.generators);
        for (long j = 0; j < fam.generators; ++j)
            a[j] = (j == fam.sigma_index) ? any(rng) : nonneg(rng);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<std::vector<long>> coordinate_box(const AffineBFamily& fam, long radius) {
    std::vector<std::vector<long>> out;
    std::vector<long> a(fam.generators, 0);
    auto rec = [&](auto&& self, long j) -> void {
        if (j == fam.generators) {
            out.push_back(a);
            return;
        }
        long lo = (j == fam.sigma_index) ? -radius : 0;
        for (long v = lo; v <= radius; ++v) {
            a[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace vfilt
