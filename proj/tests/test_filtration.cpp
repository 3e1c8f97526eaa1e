#include "vfilt/filtration.hpp"
#include "vfilt/spaces.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace vfilt;
using namespace vfilt::test;

namespace {
const BFunction det2 = bf({Q(1), Q(2)});  // det n=2 at weight (0,0)
}

TEST_CASE("p-function closed form") {
    CHECK(p_function(det2, Q("1/2")).poly == RootPoly());
    CHECK(p_function(det2, Q(2)).poly == splus({Q(1)}));
    CHECK(p_function(det2, Q(3)).poly == splus({Q(1), Q(2), Q(2)}));
    CHECK(p_function(det2, Q(1)).poly == RootPoly());
}

TEST_CASE("nu") {
    CHECK(nu(det2, Q(1)) == 1);
    CHECK(nu(det2, Q("1/2")) == 0);
    CHECK(nu(det2, Q(2)) == 2);
    CHECK(nu(det2, Q(0)) == 0);
}

TEST_CASE("weight level") {
    CHECK(weight_level(det2, Q(1)) == 1);
    CHECK(weight_level(det2, Q("5/7")) == 0);
    BFunction triple = bf({Q(1), Q(1), Q(1)});
    CHECK(weight_level(triple, Q(1)) == 3);  // hits the bound d
}

TEST_CASE("hodge level and the degree identity") {
    CHECK(hodge_level(det2, Q(1)) == 0);
    CHECK(hodge_level(det2, Q(3)) == 3);
    CHECK(hodge_level(det2, Q("-7/2")) == 0);  // alpha below every lambda_i
    CHECK(hodge_level(det2, Q(2)) == 1);

    BFunction mixed = bf({Q("1/2"), Q(2)});
    CHECK(hodge_level(mixed, Q("5/2")) == 3);  // ceil(2) + ceil(1/2) = 2 + 1
}

TEST_CASE("r_lambda and the V-ideal generator") {
    CHECK(r_lambda(det2) == -1);
    CHECK(v_ideal_structure(det2, Q(3)) == p_function(det2, Q(3)).poly);

    // det n=2 at weight (0,-2): lambdas {2, -1}
    BFunction shifted = bf({Q(2), Q(-1)});
    CHECK(r_lambda(shifted) == 1);
    CHECK(v_ideal_structure(shifted, Q("1/2")) == splus({Q(-1), Q(0)}));  // (s-1)s

    BFunction half = bf({Q("1/2"), Q("3/2")});
    CHECK(r_lambda(half) == -1);  // only the (s+1) factor contributes an integer root
    CHECK(v_ideal_structure(half, Q(5)) == p_function(half, Q(5)).poly);
}

TEST_CASE("V cap F basis") {
    // alpha > 0: principal truncation {p s^j}
    RootPoly p = p_function(det2, Q(3)).poly;  // degree 3
    auto basis = v_cap_f_basis(det2, Q(3), 4);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == p.expand());
    CHECK(basis[1] == p.expand().times_power(1));

    CHECK(v_cap_f_basis(det2, Q(3), 2).empty());  // deg p = 3 > k

    // det n=2, lambda = 0, k = 1, alpha = 0: ell_1 = 0, generator lcm{1, 1} = 1
    auto low = v_cap_f_basis(det2, Q(0), 1);
    REQUIRE(low.size() == 2);
    CHECK(low[0] == DensePoly::constant(Q(1)));
    CHECK(low[1] == DensePoly::monomial(Q(1), 1));

    // no ell_k at all: every deg p_{lambda,-l} too large
    BFunction deep = bf({Q(-4), Q(-4)});
    CHECK(v_cap_f_basis(deep, Q(-1), 1).empty());
}

TEST_CASE("grv exponent and grW membership") {
    CHECK(grv_exponent(2, 0) == 1);
    CHECK(grv_exponent(1, -1) == 0);
    CHECK(grv_exponent(3, 10) == 3);
    CHECK(grv_exponent(0, 5) == 0);

    CHECK(grw_grv_membership(1, 0));
    CHECK_FALSE(grw_grv_membership(2, 0));
    CHECK(grw_grv_membership(3, 2));
    CHECK(grw_grv_membership(3, -2));
    long total = 0;
    for (long ell = -9; ell <= 9; ++ell)
        if (grw_grv_membership(3, ell)) ++total;
    CHECK(total == 3);
}

TEST_CASE("nilpotency order") {
    SpaceFamily e6 = SpaceFamily::builtin("e6", 27);
    std::mt19937_64 rng(7);
    auto samples = sample_coordinates(e6.affine_view(), 6, 200, rng);
    CHECK(nilpotency_order(e6.affine_view(), Q(0), samples) == 3);
    CHECK(nilpotency_order(e6.affine_view(), Q("1/2"), samples) == 0);

    SpaceFamily pf4 = SpaceFamily::builtin("pfaffian", 4);
    auto pf_samples = sample_coordinates(pf4.affine_view(), 6, 200, rng);
    CHECK(nilpotency_order(pf4.affine_view(), Q(0), pf_samples) == 2);

    // corrupt family data trips the constancy check
    AffineBFamily bad = e6.affine_view();
    bad.c[0][0] = Q("1/2");
    CHECK_THROWS_AS(nilpotency_order(bad, Q(0), samples), inconsistency_error);
}

TEST_CASE("composition factor test") {
    CHECK_FALSE(composition_factor_test(det2, Q("1/2")).has_value());
    CHECK(composition_factor_test(det2, Q(1)) == 1);
    CHECK(composition_factor_test(det2, Q(2)) == 2);
    CHECK_FALSE(composition_factor_test(det2, Q(3)).has_value());  // b(-3) != 0
}

TEST_CASE("Pi sets") {
    PiSets pi = PiSets::structure_sheaf(-1, 0, 3);
    CHECK(pi.at(3) == std::set<long>{0, 1, 2, 3});
    CHECK_NOTHROW(pi.validate(2));
    CHECK_THROWS_AS(pi.at(12), std::invalid_argument);

    PiSets bad;
    bad.r_lambda = 1;
    bad.pi[0] = {1};  // element not > r_lambda
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    PiSets not_nested;
    not_nested.r_lambda = -1;
    not_nested.pi[0] = {0, 1};
    not_nested.pi[1] = {0, 1};  // missing 1 + 1 = 2
    CHECK_THROWS_AS(not_nested.validate(), std::invalid_argument);
}

TEST_CASE("fs hodge test") {
    // Pi_k covering {r_lambda+1, ..., deg p} forces membership
    RootPoly p3 = p_function(det2, Q(3)).poly;  // degree 3, r_lambda = -1
    PiSets full = PiSets::structure_sheaf(-1, 3, 3);
    CHECK(fs_hodge_test(det2, Q(3), full, 3));

    // max Pi_k below deg p forces non-membership
    PiSets low = PiSets::structure_sheaf(-1, 2, 2);
    CHECK_FALSE(fs_hodge_test(det2, Q(3), low, 2));

    // with Pi_k = {r+1..k} the test is the Hodge level condition
    for (long k = 0; k <= 5; ++k) {
        PiSets ox = PiSets::structure_sheaf(r_lambda(det2), k, k);
        CHECK(fs_hodge_test(det2, Q("5/2"), ox, k) == (hodge_level(det2, Q("5/2")) <= k));
    }
    CHECK_THROWS_AS(fs_hodge_test(det2, Q(0), full, 3), std::invalid_argument);

    // a sparse Pi set: span{[s-1]_2} = {s^2 - s}; p_{lambda,alpha} = (s-1)s
    // for b = (s+2)(s-1), alpha = 1/2 needs h constant, h(-alpha) != 0: pass
    BFunction b = bf({Q(2), Q(-1)});
    PiSets sparse;
    sparse.r_lambda = r_lambda(b);  // = 1
    sparse.pi[0] = {2};
    CHECK(fs_hodge_test(b, Q("1/2"), sparse, 0));
    PiSets empty;
    empty.r_lambda = 1;
    empty.pi[0] = {};
    CHECK_FALSE(fs_hodge_test(b, Q("1/2"), empty, 0));
}

TEST_CASE("t and dt actions") {
    PFunction p = p_function(det2, Q(3));
    PFunction up = t_action(p);
    CHECK(up.poly == p.poly.shifted(Q(1)));
    CHECK(up.alpha == Q(4));
    CHECK(up.poly == p_function(det2.shifted(1), Q(4)).poly);

    // alpha at or below min lambda: t of the trivial p-function stays trivial
    PFunction trivial = p_function(det2, Q(1));
    CHECK(trivial.poly == RootPoly());
    CHECK(t_action(trivial).poly == RootPoly());

    DtAction down = dt_action(up);
    CHECK(down.s_factor);
    CHECK(down.p.poly == p.poly);
    CHECK(down.p.alpha == p.alpha);
}

TEST_CASE("f and df matrices") {
    // b = (s+1)(s+2), alpha = 1, ell = 5: rho = 1, expansion of (s+2) at -1
    FdfMatrices m = fdf_matrices(det2, Q(1), 5);
    CHECK(m.rho == 1);
    CHECK(m.expansion == std::vector<Rational>{Q(1), Q(1)});
    CHECK(m.nu_level == 1);
    CHECK(m.mu_level == 0);
    REQUIRE(m.f.size() == 1);
    CHECK(m.f[0][0] == 1);

    // rho = 0: df is square upper triangular with b(-alpha) on the diagonal
    BFunction b = bf({Q(1), Q(2), Q(2)});
    FdfMatrices reg = fdf_matrices(b, Q(4), 10);
    CHECK(reg.rho == 0);
    CHECK(reg.nu_level == reg.mu_level);
    REQUIRE(reg.nu_level == 3);
    for (long i = 0; i < 3; ++i) CHECK(reg.df[i][i] == b.poly().eval(Q(-4)));
    CHECK(rank(reg.df) == 3);

    CHECK_THROWS_AS(fdf_matrices(det2, Q(1), -5), std::invalid_argument);
}
