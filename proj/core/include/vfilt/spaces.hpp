#pragma once

// The built-in multiplicity-free space families and their weight
// combinatorics:
//
//   det       n x n matrices under GL_n x GL_n, f = det,
//             b_p(s) = prod_i (s + 1 + p_i + n - i) on dominant p in Z^n
//   symdet    symmetric matrices under GL_n, f = det,
//             b_p(s) = prod_i (s + 1 + (p_i + n - i)/2) on even dominant p
//   pfaffian  skew matrices (n even) under GL_n, f = Pf,
//             b_p(s) = prod_{i<=n/2} (s + 1 + p_{2i} + n - 2i), p paired
//   e6        the 27-dimensional representation of E6 x C*, f the
//             Freudenthal cubic, b = (s+a3+1)(s+a2+a3+5)(s+a1+a2+a3+9)
//
// plus user-defined families loaded from the affine b-function schema. The
// ideal operations expose both the degree route (deg p_{lambda,alpha+k} <= k)
// and, for the built-ins with 0 < alpha <= 1, the closed partial-sum
// inequalities with their symbolic-power exponents; the two must agree, and a
// mismatch is a hard error.

#include "vfilt/affine_family.hpp"
#include "vfilt/bfunction.hpp"
#include "vfilt/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vfilt {

enum class SpaceKind { det, symdet, pfaffian, e6, custom };

struct PrimaryComponent {
    long t = 0;         // stratum parameter (the ideal is J_{2t} for pfaffian)
    long exponent = 0;  // symbolic power; 0 means the component is O_X
    bool operator==(const PrimaryComponent&) const = default;
};

enum class IdealRoute { degree, inequality, both };
enum class CharacterMode { weight, grW, grWgrV };

class SpaceFamily {
public:
    static SpaceFamily builtin(const std::string& name, long n);
    static SpaceFamily from_affine(AffineBFamily fam);

    const std::string& name() const { return name_; }
    SpaceKind kind() const { return kind_; }
    long param_n() const { return n_; }
    long dimension() const { return dimension_; }  // dim X
    long degree() const { return degree_; }        // deg f
    long weight_arity() const { return arity_; }
    const std::vector<long>& sigma() const { return sigma_; }

    bool is_module_weight(std::span<const long> w) const;  // Lambda(M)
    bool is_ring_weight(std::span<const long> w) const;    // Lambda(O_X)
    void require_module_weight(std::span<const long> w) const;

    BFunction b_of_weight(std::span<const long> w) const;

    // All weights with coordinates in [-bound, bound] subject to the family
    // constraints, lexicographically sorted.
    std::vector<std::vector<long>> module_weights(long bound) const;
    std::vector<std::vector<long>> ring_weights(long bound) const;

    const AffineBFamily& affine_view() const { return affine_; }
    std::vector<long> weight_of_coordinates(std::span<const long> a) const;
    // The involution realizing the b-function symmetry; built-ins only.
    std::vector<long> dual_coordinates(std::span<const long> a) const;
    bool has_dual() const { return kind_ != SpaceKind::custom; }

    bool inequality_route_available(const Rational& alpha) const;
    bool ideal_membership_inequality(long k, const Rational& alpha, std::span<const long> w) const;
    std::vector<PrimaryComponent> primary_decomposition(long k, const Rational& alpha) const;
    std::vector<std::string> ideal_constraints(long k, const Rational& alpha) const;

private:
    SpaceFamily() = default;

    std::string name_;
    SpaceKind kind_ = SpaceKind::custom;
    long n_ = 0;
    long dimension_ = 0;
    long degree_ = 0;
    long arity_ = 0;
    std::vector<long> sigma_;
    AffineBFamily affine_;

    // Partial-sum thresholds of the inequality route, indexed by t.
    std::vector<Rational> tail_bounds(long k, const Rational& alpha) const;
    long tail_sum(std::span<const long> w, long t) const;
};

bool ideal_weight_membership(const SpaceFamily& fam, long k, const Rational& alpha,
                             std::span<const long> w, IdealRoute route = IdealRoute::degree);

struct WeightSet {
    std::vector<std::string> constraints;
    std::vector<std::vector<long>> weights;
    std::vector<PrimaryComponent> primary;  // empty when no closed form applies
};

WeightSet ideal_weight_set(const SpaceFamily& fam, long k, const Rational& alpha,
                           long degree_bound, IdealRoute route = IdealRoute::degree,
                           int threads = 1);

// Weights lambda in Lambda(M) within the box whose component survives the
// requested filter; the emitted weight is lambda, to be read as
// lambda - alpha*sigma.
std::vector<std::vector<long>> graded_character(const SpaceFamily& fam, const Rational& alpha,
                                                long ell, long degree_bound, CharacterMode mode);

}  // namespace vfilt
