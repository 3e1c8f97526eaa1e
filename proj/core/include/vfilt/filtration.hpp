#pragma once

// The closed forms attached to an irreducible isotypic component with
// b-function b(s) = prod (s + lambda_i):
//
//   p-function      p_{lambda,alpha}(s) = prod_i [s + lambda_i]_{ceil(alpha - lambda_i)}
//   nu              #{ i : alpha - lambda_i in Z_{>=0} }
//   weight level    smallest l with m f^{-alpha} in W_{q+l}, which equals nu
//   Hodge level     deg p_{lambda,alpha}, the smallest k with m f^{-alpha} in F_k
//   V-ideal         lcm{ [s - r_lambda]_{r_lambda + 1}, p_{lambda,alpha} }
//   V cap F bases, grV Jordan data, t/dt and f/df actions, and the span
//   membership test for the Hodge filtration of a general pure source.

#include "vfilt/affine_family.hpp"
#include "vfilt/bfunction.hpp"
#include "vfilt/dense_poly.hpp"
#include "vfilt/linear_solve.hpp"
#include "vfilt/rational.hpp"
#include "vfilt/root_poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace vfilt {

struct PFunction {
    RootPoly poly;
    BFunction source;  // the b-function it was built from
    Rational alpha;
};

PFunction p_function(const BFunction& b, const Rational& alpha);

long nu(const BFunction& b, const Rational& alpha);

// The minimal l with m f^{-alpha} in W_{q+l}; callers add the ambient pure
// weight q themselves.
long weight_level(const BFunction& b, const Rational& alpha);

// The minimal k with m f^{-alpha} in F_k, for M = (O_X)_f. Computed as
// deg p_{lambda,alpha} and re-derived as sum_{beta < alpha} nu(b, beta) over
// the jump values; disagreement is an inconsistency_error.
long hodge_level(const BFunction& b, const Rational& alpha);

// Jump values beta < alpha with nu(b, beta) > 0, ascending.
std::vector<Rational> jump_values_below(const BFunction& b, const Rational& alpha);

// Largest integer root of (s+1) b(s); at least -1.
long r_lambda(const BFunction& b);

// Generator of (V^alpha iota_+ S)_lambda.
RootPoly v_ideal_structure(const BFunction& b, const Rational& alpha);

// Minimal l >= 0 with deg p_{lambda,-l} <= k - l, if any.
std::optional<long> hodge_jump_ell(const BFunction& b, long k);

// Q-basis of the degree <= k part of (V^alpha cap F_{k+1})_lambda.
std::vector<DensePoly> v_cap_f_basis(const BFunction& b, const Rational& alpha, long k);

// Exponent of (s+alpha) on the level-l piece of the monodromy weight
// filtration of C[s]/(s+alpha)^nu: 0 when nu <= -l, else
// min{ floor((nu+l+1)/2), nu }.
long grv_exponent(long nu, long ell);

// Whether U_{lambda - alpha sigma} appears in gr^{W(N)}_l gr^alpha_V:
// nu + l odd and nu > |l|.
bool grw_grv_membership(long nu, long ell);

// Nilpotency order of N = s + alpha on gr^alpha_V, evaluated at a = 0 and
// verified constant across the sampled coordinates (inconsistency_error on a
// violation: the family data is bad).
long nilpotency_order(const AffineBFamily& fam, const Rational& alpha,
                      const std::vector<std::vector<long>>& samples);

// Empty when D.m f^{-alpha} = D.m f^{-alpha+1} (b(-alpha) != 0); otherwise
// the weight offset nu at which the unique simple quotient sits in gr^W.
std::optional<long> composition_factor_test(const BFunction& b, const Rational& alpha);

// The sets Pi_k = { l > r_lambda : (F_{k-l} S)_{lambda + l sigma} != 0 }
// describing the Hodge filtration of a general pure source S.
struct PiSets {
    long r_lambda = -1;
    std::map<long, std::set<long>> pi;

    const std::set<long>& at(long k) const;
    // Checks l > r_lambda, Pi_k subset Pi_{k+1}, Pi_k + 1 subset Pi_{k+1},
    // and (given d) Pi_k - 1 subset Pi_{k+d-1} union {r_lambda}, on the
    // supplied keys. Throws std::invalid_argument on a violation.
    void validate(std::optional<long> d = std::nullopt) const;

    // Pi_k for S = O_X: {r_lambda + 1, ..., k}.
    static PiSets structure_sheaf(long r_lambda, long k_min, long k_max);
};

// Whether (F_k(M f^{-alpha}))_{lambda - alpha sigma} != 0: is there h with
// h(-alpha) != 0 and h * p_{lambda,alpha} in span{ [s-l+1]_l : l in Pi_k }.
// Requires alpha > 0.
bool fs_hodge_test(const BFunction& b, const Rational& alpha, const PiSets& pi, long k);

// t: p_{lambda,alpha} -> p_{lambda+sigma,alpha+1} = p(s+1).
PFunction t_action(const PFunction& p);

// dt: p_{lambda,alpha} -> s * p_{lambda-sigma,alpha-1}; the s factor stays
// symbolic so the p-function invariant p(-alpha) != 0 survives alpha = 0.
struct DtAction {
    bool s_factor;
    PFunction p;
};
DtAction dt_action(const PFunction& p);

// Matrices of f and df on the level-l piece of W(N) gr^alpha_V, in the basis
// 1, (s+alpha), (s+alpha)^2, ... The f matrix is [Id_nu 0] and the df matrix
// is [0 C]^T with C the mu x (nu - rho) upper-triangular Toeplitz matrix of
// the expansion b(s)/(s+alpha)^rho = sum c_i (s+alpha)^i.
struct FdfMatrices {
    long rho = 0;       // multiplicity of -alpha as a root of b
    long nu_level = 0;  // exponent at lambda, the target of both maps
    long mu_level = 0;  // exponent at lambda + sigma
    std::vector<Rational> expansion;  // the c_i
    Mat f;   // nu_level x (exponent at lambda - sigma)
    Mat df;  // nu_level x mu_level
};
FdfMatrices fdf_matrices(const BFunction& b, const Rational& alpha, long ell);

}  // namespace vfilt
