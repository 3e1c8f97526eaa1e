#include "vfilt/affine_family.hpp"
#include "vfilt/bfunction.hpp"
#include "vfilt/oracle.hpp"
#include "vfilt/spaces.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace vfilt;
using namespace vfilt::test;

TEST_CASE("c_poly base cases") {
    CHECK(c_poly(RootPoly(), splus({Q(1), Q(2)})) == RootPoly());
    CHECK(c_poly(splus({Q(1)}), splus({Q(1), Q(2)})) == splus({Q(1)}));
    CHECK(c_poly(splus({Q(1), Q(2)}), splus({Q(1), Q(2)})) == splus({Q(1), Q(2)}));
}

TEST_CASE("c_poly brute force pinned values") {
    CHECK(oracle::c_poly_bruteforce(RootPoly(), splus({Q(4)})) == RootPoly());
    CHECK(oracle::c_poly_bruteforce(splus({Q(1)}), splus({Q(1), Q(2)})) == splus({Q(1)}));
    // i = 0 gives (s+3), i = 1 gives (s+4)(s+1): coprime
    CHECK(oracle::c_poly_bruteforce(splus({Q(3)}), splus({Q(1)})) == RootPoly());
}

TEST_CASE("transport pinned values") {
    BFunction b = bf({Q(1), Q(2)});
    CHECK(transport(b, RootPoly()) == b);
    CHECK(transport(b, splus({Q(1)})) == bf({Q(2), Q(2)}));
    CHECK(transport(b, splus({Q(1), Q(2), Q(3)})) == bf({Q(4), Q(2)}));
    CHECK(transport_via_gcd(b, splus({Q(1)})) == bf({Q(2), Q(2)}));
    CHECK(transport_via_gcd(b, splus({Q(1), Q(2), Q(3)})) == bf({Q(4), Q(2)}));
}

TEST_CASE("transport keeps the degree") {
    BFunction b = bf({Q("1/2"), Q(1), Q(1)});
    RootPoly p = splus({Q("1/2"), Q("3/2"), Q(1), Q(2), Q(5)});
    CHECK(transport(b, p).degree() == b.degree());
    CHECK(transport(b, p) == transport_via_gcd(b, p));
}

namespace {

AffineBFamily e6_family() { return SpaceFamily::builtin("e6", 27).affine_view(); }

}  // namespace

TEST_CASE("E6 family evaluation") {
    AffineBFamily fam = e6_family();
    std::vector<long> zero{0, 0, 0};
    CHECK(fam.eval(zero) == bf({Q(1), Q(5), Q(9)}));
    std::vector<long> a100{1, 0, 0};
    CHECK(fam.eval(a100) == bf({Q(1), Q(5), Q(10)}));
    std::vector<long> a011{0, 1, 1};
    CHECK(fam.eval(a011) == bf({Q(2), Q(7), Q(11)}));

    // incrementing the sigma coordinate shifts every root by one
    std::vector<long> up{1, 0, 1};
    CHECK(fam.eval(up) == fam.eval(a100).shifted(1));

    std::vector<long> bad{-1, 0, 0};
    CHECK_THROWS_AS(fam.eval(bad), std::invalid_argument);
    std::vector<long> localized{0, 0, -3};  // sigma may go negative
    CHECK(fam.eval(localized) == bf({Q(-2), Q(2), Q(6)}));
}

TEST_CASE("family validation") {
    AffineBFamily fam = e6_family();
    fam.c[1][1] = Q(7);  // exceeds deg h_2 = 2
    CHECK_THROWS_AS(fam.validate(), std::invalid_argument);

    fam = e6_family();
    fam.r.pop_back();
    CHECK_THROWS_AS(fam.validate(), std::invalid_argument);

    fam = e6_family();
    fam.c[0][2] = Q("1/2");  // sigma column must be all ones
    CHECK_THROWS_AS(fam.validate(), std::invalid_argument);
}

TEST_CASE("b-function symmetry for E6") {
    AffineBFamily fam = e6_family();
    // lambda* in semigroup coordinates: (a1,a2,a3) -> (a2, a1, -a1-a2-a3)
    DualMap dual = [](std::span<const long> a) {
        return std::vector<long>{a[1], a[0], -a[0] - a[1] - a[2]};
    };
    SymmetryReport report = check_symmetry(fam, 27, dual, coordinate_box(fam, 3));
    CHECK(report.pass);

    // the same involution with +a3 in the last slot only works on the
    // a3 = 0 slice
    DualMap broken = [](std::span<const long> a) {
        return std::vector<long>{a[1], a[0], -a[0] - a[1] + a[2]};
    };
    std::vector<std::vector<long>> slice;
    for (const auto& a : coordinate_box(fam, 2))
        if (a[2] == 0) slice.push_back(a);
    CHECK(check_symmetry(fam, 27, broken, slice).pass);
    std::vector<std::vector<long>> off_slice{{0, 0, 1}};
    CHECK_FALSE(check_symmetry(fam, 27, broken, off_slice).pass);
}

TEST_CASE("b-function symmetry for the determinant") {
    SpaceFamily det2 = SpaceFamily::builtin("det", 2);
    auto dual = [&det2](std::span<const long> a) { return det2.dual_coordinates(a); };
    SymmetryReport report =
        check_symmetry(det2.affine_view(), det2.dimension(), dual, coordinate_box(det2.affine_view(), 5));
    CHECK(report.pass);

    // reflected roots at a = 0 for any family: {n/d + 1 - lambda_i}
    SpaceFamily det3 = SpaceFamily::builtin("det", 3);
    std::vector<long> zero{0, 0, 0};
    auto lams = det3.affine_view().eval(zero).lambdas();
    RootPoly reflected;
    for (const auto& lam : lams) reflected *= RootPoly::sfactor(Q(4) - lam);  // n/d + 1 = 4
    CHECK(reflected == det3.affine_view().eval(zero).poly());
}
