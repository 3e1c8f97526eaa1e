#include "vfilt/oracle.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace vfilt;
using namespace vfilt::test;

TEST_CASE("greedy p-function pinned values") {
    BFunction b = bf({Q(1), Q(2)});  // det n=2, weight 0
    CHECK(oracle::p_function_greedy(b, Q("1/2")) == RootPoly());
    CHECK(oracle::p_function_greedy(b, Q(1)) == RootPoly());
    CHECK(oracle::p_function_greedy(b, Q(2)) == splus({Q(1)}));
    CHECK(oracle::p_function_greedy(b, Q(3)) == splus({Q(1), Q(2), Q(2)}));
}

TEST_CASE("greedy p-function stops immediately when all roots clear alpha") {
    BFunction b = bf({Q(3), Q("7/2")});
    CHECK(oracle::p_function_greedy(b, Q(3)) == RootPoly());
    CHECK(oracle::p_function_greedy(b, Q(-10)) == RootPoly());
}

TEST_CASE("greedy p-function is choice independent") {
    std::mt19937_64 rng(12345);
    BFunction b = bf({Q(1), Q(1), Q("3/2")});
    for (int i = 0; i < 20; ++i)
        CHECK(oracle::p_function_greedy_random(b, Q("7/2"), rng) ==
              oracle::p_function_greedy(b, Q("7/2")));
}

TEST_CASE("Jordan weight dimensions") {
    for (long ell = -5; ell <= 5; ++ell) CHECK(oracle::jordan_weight_dim(0, Q(1), ell) == 0);
    CHECK(oracle::jordan_weight_dim(1, Q(1), 0) == 1);
    CHECK(oracle::jordan_weight_dim(1, Q(1), -1) == 0);
    CHECK(oracle::jordan_weight_dim(2, Q("1/2"), 0) == 1);
    CHECK(oracle::jordan_weight_dim(2, Q("1/2"), 1) == 2);
    CHECK(oracle::jordan_weight_dim(2, Q("1/2"), -2) == 0);
    CHECK(oracle::jordan_weight_dim(3, Q(-2), 0) == 2);
}

TEST_CASE("brute force c_poly stabilization is asserted") {
    RootPoly p = splus({Q(1), Q(2), Q("1/2")});
    RootPoly q = splus({Q(1), Q(3)});
    CHECK_NOTHROW(oracle::c_poly_bruteforce(p, q, true));
}
