#pragma once

// Affine families of b-functions in semigroup coordinates: a weight
// lambda = sum_j a_j * lambda^j evaluates to
//
//   b_lambda(s) = prod_{i=1}^{d} ( s + r_i + sum_j c_{ij} a_j ),
//
// with 0 <= c_{ij} <= deg h_j. The sigma generator is the semi-invariant f
// itself, so its coordinate may go negative (localization) and its column of
// c is all ones. This is also the schema of user-defined space files.

#include "vfilt/bfunction.hpp"
#include "vfilt/rational.hpp"

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace vfilt {

struct AffineBFamily {
    std::string name;
    long dimension = 0;                  // dim X
    long d = 0;                          // deg f = deg b
    long generators = 0;                 // number of semigroup generators
    std::vector<long> degrees;           // deg h_j
    long sigma_index = 0;                // 0-based; JSON uses 1-based
    std::vector<Rational> r;             // d base roots
    std::vector<std::vector<Rational>> c;  // d x generators

    // lambda_i(a) = r_i + sum_j c_{ij} a_j. Coordinates other than sigma must
    // be nonnegative.
    BFunction eval(std::span<const long> a) const;

    bool valid_coordinates(std::span<const long> a) const;

    // Shape, bounds 0 <= c_ij <= deg h_j, and the all-ones sigma column
    // (equivalent to eval(a + e_sigma) = shift(eval(a), 1)).
    void validate() const;

    // #{ i : lambda_i(a) is in alpha + Z } at the given coordinates.
    long integer_class_count(const Rational& alpha, std::span<const long> a) const;

    // Checks that the multiset of fractional parts of the lambda_i(a) does
    // not move across the samples, which is exactly the statement that
    // integer_class_count(alpha, .) is constant for every rational alpha.
    // Throws std::invalid_argument on a violation.
    void validate_class_constancy(const std::vector<std::vector<long>>& samples) const;
};

// Coordinate involution for the b-function symmetry check.
using DualMap = std::function<std::vector<long>(std::span<const long>)>;

struct SymmetryReport {
    bool pass = true;
    std::optional<std::vector<long>> counterexample;
    std::string detail;
};

// Verifies b_lambda(s) = (-1)^d b_{lambda*}(-s - n/d - 1) as a root-multiset
// identity for every listed coordinate vector.
SymmetryReport check_symmetry(const AffineBFamily& fam, long n, const DualMap& dual,
                              const std::vector<std::vector<long>>& samples);

// Random valid coordinate vectors, sigma coordinate in [-radius, radius],
// others in [0, radius]; always includes the origin.
std::vector<std::vector<long>> sample_coordinates(const AffineBFamily& fam, long radius,
                                                  long count, std::mt19937_64& rng);

// Every valid coordinate vector with sigma in [-radius, radius] and the rest
// in [0, radius].
std::vector<std::vector<long>> coordinate_box(const AffineBFamily& fam, long radius);

}  // namespace vfilt
