#include "vfilt/dense_poly.hpp"
#include "vfilt/linear_solve.hpp"
#include "vfilt/rational.hpp"
#include "vfilt/root_poly.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace vfilt;
using namespace vfilt::test;

TEST_CASE("rational parsing and printing") {
    CHECK(rational_to_string(Q("3/6")) == "1/2");
    CHECK(rational_to_string(Q("-4/2")) == "-2");
    CHECK(rational_to_string(Q(7)) == "7");
    CHECK(Q("2/-4") == Q("-1/2"));  // canonicalized: positive denominator
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
    CHECK(ceil_long(Q("1/2")) == 1);
    CHECK(ceil_long(Q("-1/2")) == 0);
    CHECK(floor_long(Q("-1/2")) == -1);
    CHECK(ceil_long(Q(3)) == 3);
}

TEST_CASE("pochhammer") {
    CHECK(RootPoly::pochhammer(Q(1), 3) == splus({Q(1), Q(2), Q(3)}));
    CHECK(RootPoly::pochhammer(Q("5/2"), 0) == RootPoly());
    CHECK(RootPoly::pochhammer(Q("5/2"), -2) == RootPoly());
    CHECK(RootPoly::pochhammer(Q(-1), 2) == splus({Q(-1), Q(0)}));  // (s-1)s
}

TEST_CASE("gcd and lcm are multiset min and max") {
    RootPoly p12 = splus({Q(1), Q(2)});
    RootPoly p23 = splus({Q(2), Q(3)});
    CHECK(RootPoly::gcd(p12, p23) == splus({Q(2)}));
    CHECK(RootPoly::gcd(RootPoly(), p12) == RootPoly());
    CHECK(RootPoly::gcd(splus({Q(1), Q(1)}), splus({Q(1), Q(5)})) == splus({Q(1)}));

    CHECK(RootPoly::lcm(splus({Q(1)}), p12) == p12);
    CHECK(RootPoly::lcm(RootPoly(), p12) == p12);
    CHECK(RootPoly::lcm(splus({Q(-1), Q(0)}), splus({Q(1)})) == splus({Q(-1), Q(0), Q(1)}));
}

TEST_CASE("shift") {
    CHECK(splus({Q(1), Q(2)}).shifted(Q(1)) == splus({Q(2), Q(3)}));
    RootPoly p = splus({Q(1), Q(-3), Q("1/2")});
    CHECK(p.shifted(Q(0)) == p);
    CHECK(splus({Q(-1)}).shifted(Q(-2)) == splus({Q(-3)}));
}

TEST_CASE("expansion in the basis (s + alpha)^i") {
    CHECK(splus({Q(2)}).expand_at(Q(1)) == std::vector<Rational>{Q(1), Q(1)});
    CHECK(splus({Q(1), Q(1)}).expand_at(Q(1)) == std::vector<Rational>{Q(0), Q(0), Q(1)});
    CHECK(splus({Q(1), Q(3)}).expand_at(Q(2)) == std::vector<Rational>{Q(-1), Q(0), Q(1)});
}

TEST_CASE("dense expansion and exact refactorization") {
    RootPoly p = splus({Q(1), Q(2), Q("1/2"), Q("-5/3")});
    CHECK(p.expand().to_root_poly() == p);
    CHECK(RootPoly().expand() == DensePoly::constant(Q(1)));

    // s^2 + 1 does not split over Q
    DensePoly no_split({Q(1), Q(0), Q(1)});
    CHECK_THROWS_AS(no_split.to_root_poly(), std::domain_error);
    DensePoly not_monic({Q(1), Q(2)});
    CHECK_THROWS_AS(not_monic.to_root_poly(), std::domain_error);
    CHECK_THROWS_AS(DensePoly().to_root_poly(), std::domain_error);
}

TEST_CASE("root poly printing") {
    CHECK(splus({Q(1), Q(2), Q(2)}).to_string() == "(s+1)(s+2)^2");
    CHECK(splus({Q(-1), Q(0)}).to_string() == "(s-1)s");
    CHECK(RootPoly().to_string() == "1");
    CHECK(splus({Q("3/2")}).to_string() == "(s+3/2)");
}

TEST_CASE("solve_linear: identity system") {
    Mat a = identity(3);
    Vec rhs{Q(1), Q(0), Q(0)};
    LinearSolution sol = solve_linear(a, rhs);
    REQUIRE(sol.consistent);
    CHECK(sol.particular == rhs);
    CHECK(sol.null_basis.empty());
}

TEST_CASE("solve_linear: zero system") {
    Mat a(2, Vec(2, Q(0)));
    LinearSolution sol = solve_linear(a, Vec(2, Q(0)));
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Vec{Q(0), Q(0)});
    CHECK(sol.null_basis.size() == 2);
}

TEST_CASE("solve_linear: underdetermined row") {
    Mat a{{Q(1), Q(1)}};
    LinearSolution sol = solve_linear(a, Vec{Q(1)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Vec{Q(1), Q(0)});
    REQUIRE(sol.null_basis.size() == 1);
    // spans {(1, -1)}
    const Vec& v = sol.null_basis[0];
    CHECK(v[0] == -v[1]);
    CHECK(v[0] != 0);
}

TEST_CASE("solve_linear: inconsistent") {
    Mat a{{Q(1), Q(1)}, {Q(1), Q(1)}};
    LinearSolution sol = solve_linear(a, Vec{Q(1), Q(2)});
    CHECK_FALSE(sol.consistent);
    CHECK(sol.null_basis.size() == 1);
}
