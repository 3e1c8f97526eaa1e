#include "vfilt/selfcheck.hpp"

#include "vfilt/filtration.hpp"
#include "vfilt/oracle.hpp"
#include "vfilt/spaces.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace vfilt {

namespace {

struct Corpus {
    std::mt19937_64 rng;
    long cases;

    explicit Corpus(std::uint64_t seed, long cases) : rng(seed), cases(cases) {}

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    // num in [-5, 5], den in {1, 2, 3}
    Rational rational() { return make_rational(pick(-5, 5), pick(1, 3)); }

    RootPoly root_poly(long max_degree = 6) {
        RootPoly p;
        long deg = pick(0, max_degree);
        for (long i = 0; i < deg; ++i) p *= RootPoly::linear_root(rational());
        return p;
    }

    BFunction bfunction(long max_degree = 6) {
        long deg = pick(1, max_degree);
        std::vector<Rational> lams;
        for (long i = 0; i < deg; ++i) lams.push_back(rational());
        return BFunction::from_lambdas(lams);
    }

    // A polynomial sharing root classes with b: products of chain factors
    // (s + lambda_i + j) plus occasional unrelated noise.
    RootPoly chain_poly(const BFunction& b) {
        RootPoly p;
        auto lams = b.lambdas();
        long factors = pick(0, 5);
        for (long i = 0; i < factors; ++i) {
            if (pick(0, 4) == 0) {
                p *= RootPoly::sfactor(rational());
            } else {
                Rational lam = lams[pick(0, static_cast<long>(lams.size()) - 1)];
                p *= RootPoly::sfactor(lam + pick(0, 4));
            }
        }
        return p;
    }

    SpaceFamily family() {
        switch (pick(0, 3)) {
            case 0: return SpaceFamily::builtin("det", pick(1, 4));
            case 1: return SpaceFamily::builtin("symdet", pick(1, 4));
            case 2: return SpaceFamily::builtin("pfaffian", 2 * pick(1, 2));
            default: return SpaceFamily::builtin("e6", 27);
        }
    }

    std::vector<long> module_weight(const SpaceFamily& fam, long radius) {
        for (;;) {
            std::vector<long> w(fam.weight_arity());
            switch (fam.kind()) {
                case SpaceKind::det:
                case SpaceKind::symdet:
                case SpaceKind::pfaffian: {
                    for (auto& x : w) x = pick(-radius, radius);
                    std::sort(w.rbegin(), w.rend());
                    if (fam.kind() == SpaceKind::symdet)
                        for (auto& x : w) x = 2 * (x / 2);
                    if (fam.kind() == SpaceKind::pfaffian)
                        for (size_t i = 0; i + 1 < w.size(); i += 2) w[i + 1] = w[i];
                    break;
                }
                default:
                    for (size_t j = 0; j < w.size(); ++j)
                        w[j] = (static_cast<long>(j) == fam.affine_view().sigma_index)
                                   ? pick(-radius, radius)
                                   : pick(0, radius);
            }
            if (fam.is_module_weight(w)) return w;
        }
    }

    Rational alpha_on_quarter_grid() { return make_rational(pick(-8, 16), 4); }
};

using CheckFn = std::function<std::string(Corpus&)>;  // empty string = pass

std::string fail(const std::string& msg) { return msg; }

// ---- ratpoly ----------------------------------------------------------

std::string check_gcd_lcm(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        RootPoly p = c.root_poly(), q = c.root_poly();
        if (RootPoly::gcd(p, q) * RootPoly::lcm(p, q) != p * q)
            return fail("gcd*lcm != p*q for p = " + p.to_string() + ", q = " + q.to_string());
    }
    return {};
}

std::string check_shift_laws(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        RootPoly p = c.root_poly(), q = c.root_poly();
        Rational a = c.rational(), b = c.rational();
        if (p.shifted(a).shifted(b) != p.shifted(Rational(a + b)))
            return fail("shift additivity fails for " + p.to_string());
        if ((p * q).shifted(a) != p.shifted(a) * q.shifted(a))
            return fail("shift is not multiplicative on " + p.to_string() + ", " + q.to_string());
    }
    return {};
}

std::string check_pochhammer_recursion(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        Rational a = c.rational();
        long k = c.pick(1, 8);
        if (RootPoly::pochhammer(a, k) !=
            RootPoly::pochhammer(a, k - 1) * RootPoly::sfactor(Rational(a + k - 1)))
            return fail("pochhammer recursion fails at a = " + rational_to_string(a) +
                        ", k = " + std::to_string(k));
    }
    return {};
}

std::string check_dense_round_trip(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        RootPoly p = c.root_poly();
        if (p.expand().to_root_poly() != p)
            return fail("dense round trip fails for " + p.to_string());
    }
    return {};
}

std::string check_expand_at_reeval(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        RootPoly p = c.root_poly();
        Rational alpha = c.rational();
        std::vector<Rational> coeffs = p.expand_at(alpha);
        for (int pt = 0; pt < 100 / 10; ++pt) {
            Rational x = c.rational();
            Rational u = x + alpha, value(0), power(1);
            for (const auto& ci : coeffs) {
                value += ci * power;
                power *= u;
            }
            if (value != p.eval(x))
                return fail("expand_at reevaluation fails for " + p.to_string() + " at alpha = " +
                            rational_to_string(alpha));
        }
    }
    return {};
}

std::string check_solve_linear(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        long rows = c.pick(1, 5), cols = c.pick(1, 5);
        Mat a(rows, Vec(cols));
        Vec rhs(rows);
        for (auto& row : a)
            for (auto& x : row) x = c.rational();
        for (auto& x : rhs) x = c.rational();
        LinearSolution sol = solve_linear(a, rhs);
        auto apply = [&](const Vec& v) {
            Vec out(rows, Rational(0));
            for (long r = 0; r < rows; ++r)
                for (long cc = 0; cc < cols; ++cc) out[r] += a[r][cc] * v[cc];
            return out;
        };
        if (sol.consistent) {
            Vec got = apply(sol.particular);
            for (long r = 0; r < rows; ++r)
                if (got[r] != rhs[r]) return fail("particular solution does not solve the system");
        }
        for (const auto& v : sol.null_basis) {
            for (const auto& entry : apply(v))
                if (entry != 0) return fail("null basis vector not in the kernel");
        }
        // dimension check: rank + nullity = cols
        if (rank(a) + static_cast<long>(sol.null_basis.size()) != cols)
            return fail("rank-nullity mismatch");
    }
    return {};
}

// ---- bfun --------------------------------------------------------------

std::string check_transport_identity(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        if (transport(b, RootPoly()) != b) return fail("transport(b, 1) != b");
    }
    return {};
}

std::string check_transport_dual_route(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        RootPoly p = c.chain_poly(b);
        BFunction greedy = transport(b, p);
        BFunction via_gcd = transport_via_gcd(b, p);
        if (greedy != via_gcd)
            return fail("transport routes disagree for b = " + b.poly().to_string() + ", p = " +
                        p.to_string() + ": " + greedy.poly().to_string() + " vs " +
                        via_gcd.poly().to_string());
        if (greedy.degree() != b.degree()) return fail("transport changed the degree");
    }
    return {};
}

std::string check_transport_composition(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        RootPoly p1 = c.chain_poly(b);
        BFunction mid = transport(b, p1);
        RootPoly p2 = c.chain_poly(mid);
        if (transport(mid, p2) != transport_via_gcd(mid, p2))
            return fail("composition step disagrees with gcd route");
    }
    return {};
}

std::string check_c_poly_vs_bruteforce(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        RootPoly p = c.root_poly(), q = c.root_poly();
        RootPoly closed = c_poly(p, q);
        RootPoly brute = oracle::c_poly_bruteforce(p, q);
        if (closed != brute)
            return fail("c_poly mismatch for p = " + p.to_string() + ", q = " + q.to_string() +
                        ": recursion " + closed.to_string() + ", brute force " + brute.to_string());
    }
    return {};
}

std::string check_family_shift_law(Corpus& c) {
    for (const char* name : {"det", "symdet", "pfaffian", "e6"}) {
        SpaceFamily fam = SpaceFamily::builtin(name, std::string(name) == "pfaffian" ? 4 : 3);
        const AffineBFamily& view = fam.affine_view();
        auto samples = sample_coordinates(view, 5, c.cases / 4 + 1, c.rng);
        for (const auto& a : samples) {
            std::vector<long> up = a;
            up[view.sigma_index] += 1;
            if (view.eval(up) != view.eval(a).shifted(1))
                return fail(std::string("shift law fails for family ") + name);
        }
    }
    return {};
}

std::string check_affine_matches_builtin(Corpus& c) {
    for (const char* name : {"det", "symdet", "pfaffian", "e6"}) {
        SpaceFamily fam = SpaceFamily::builtin(name, std::string(name) == "pfaffian" ? 4 : 3);
        auto samples = sample_coordinates(fam.affine_view(), 4, c.cases / 8 + 1, c.rng);
        for (const auto& a : samples) {
            if (fam.affine_view().eval(a) != fam.b_of_weight(fam.weight_of_coordinates(a)))
                return fail(std::string("affine view disagrees with the weight formula for ") + name);
        }
    }
    return {};
}

std::string check_class_count_constancy(Corpus& c) {
    for (const char* name : {"det", "symdet", "pfaffian", "e6"}) {
        SpaceFamily fam = SpaceFamily::builtin(name, std::string(name) == "pfaffian" ? 4 : 3);
        const AffineBFamily& view = fam.affine_view();
        auto samples = sample_coordinates(view, 6, 200, c.rng);
        for (const Rational& alpha :
             {make_rational(0), make_rational(1, 2), make_rational(1, 3)}) {
            try {
                nilpotency_order(view, alpha, samples);
            } catch (const inconsistency_error& e) {
                return fail(e.what());
            }
        }
    }
    return {};
}

std::string check_builtin_symmetry(Corpus&) {
    struct Case {
        const char* name;
        long n;
    };
    for (const Case& cs : {Case{"det", 2}, Case{"det", 3}, Case{"symdet", 2}, Case{"symdet", 3},
                           Case{"pfaffian", 4}, Case{"e6", 27}}) {
        SpaceFamily fam = SpaceFamily::builtin(cs.name, cs.n);
        auto dual = [&fam](std::span<const long> a) { return fam.dual_coordinates(a); };
        SymmetryReport report = check_symmetry(fam.affine_view(), fam.dimension(), dual,
                                               coordinate_box(fam.affine_view(), 3));
        if (!report.pass)
            return fail(std::string(cs.name) + " symmetry fails: " + report.detail);
    }
    return {};
}

// ---- filtration ---------------------------------------------------------

std::string check_p_function_vs_greedy(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction(4);
        Rational alpha = c.alpha_on_quarter_grid();
        RootPoly closed = p_function(b, alpha).poly;
        RootPoly greedy = oracle::p_function_greedy(b, alpha);
        if (closed != greedy)
            return fail("p-function routes disagree for b = " + b.poly().to_string() +
                        ", alpha = " + rational_to_string(alpha));
    }
    return {};
}

std::string check_greedy_tie_randomization(Corpus& c) {
    for (long i = 0; i < c.cases / 5 + 1; ++i) {
        BFunction b = c.bfunction(4);
        Rational alpha = c.alpha_on_quarter_grid();
        RootPoly reference = oracle::p_function_greedy(b, alpha);
        for (int rep = 0; rep < 3; ++rep)
            if (oracle::p_function_greedy_random(b, alpha, c.rng) != reference)
                return fail("greedy p-function depends on the choice of offending root");
    }
    return {};
}

std::string check_nu_definitional(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        Rational alpha = c.alpha_on_quarter_grid();
        BFunction moved = transport(b, p_function(b, alpha).poly);
        if (nu(b, alpha) != moved.mult_of_lambda(alpha))
            return fail("nu count disagrees with mult_{s=-alpha} of the transported b-function");
    }
    return {};
}

std::string check_degree_identity(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        Rational alpha = c.alpha_on_quarter_grid();
        try {
            hodge_level(b, alpha);  // computes and compares both routes
        } catch (const inconsistency_error& e) {
            return fail(e.what());
        }
    }
    return {};
}

std::string check_p_function_structure(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        Rational alpha = c.alpha_on_quarter_grid();
        RootPoly p = p_function(b, alpha).poly;

        if (p.eval(Rational(-alpha)) == 0) return fail("p(-alpha) = 0");

        Rational beta = alpha - make_rational(c.pick(0, 8), 4);
        if (!p_function(b, beta).poly.divides(p))
            return fail("divisibility monotonicity fails between beta <= alpha");

        // jump identity with a concrete epsilon: half the gap to the next
        // jump value of b in (alpha, alpha + 1]
        Rational eps(1, 2);
        for (const auto& lam : b.lambdas()) {
            Rational next = lam + ceil_int(Rational(alpha - lam));  // smallest class point > alpha - 1
            while (next <= alpha) next += 1;
            if (next <= alpha + 1) eps = std::min(eps, Rational((next - alpha) / 2));
        }
        RootPoly jumped = p_function(b, Rational(alpha + eps)).poly;
        if (jumped != p * RootPoly::sfactor(alpha, nu(b, alpha)))
            return fail("jump identity fails at alpha = " + rational_to_string(alpha));

        if (p_function(b.shifted(1), Rational(alpha + 1)).poly != p.shifted(Rational(1)))
            return fail("shift covariance fails");

        if (weight_level(b, alpha) > b.degree()) return fail("weight level exceeds d");
    }
    return {};
}

std::string check_grv_vs_jordan(Corpus&) {
    for (long nu_val = 0; nu_val <= 8; ++nu_val) {
        for (long ell = -10; ell <= 10; ++ell) {
            long closed = grv_exponent(nu_val, ell);
            long brute = oracle::jordan_weight_dim(nu_val, make_rational(1, 2), ell);
            if (closed != brute)
                return fail("grv_exponent(" + std::to_string(nu_val) + ", " + std::to_string(ell) +
                            ") = " + std::to_string(closed) + " but Jordan model gives " +
                            std::to_string(brute));
        }
    }
    return {};
}

std::string check_grw_levels(Corpus&) {
    for (long nu_val = 0; nu_val <= 8; ++nu_val) {
        long total = 0;
        for (long ell = -12; ell <= 12; ++ell) {
            bool member = grw_grv_membership(nu_val, ell);
            bool expected = (nu_val + ell) % 2 != 0 && std::labs(ell) <= nu_val - 1;
            if (member != expected) return fail("grW membership levels are not {nu-1, nu-3, ...}");
            if (member) ++total;
            long step = grv_exponent(nu_val, ell) - grv_exponent(nu_val, ell - 1);
            if (step < 0 || step > 1) return fail("grv exponent increment outside {0,1}");
            if ((step == 1) != member) return fail("graded jump does not match grW membership");
        }
        if (total != nu_val) return fail("grW membership count != nu");
    }
    return {};
}

std::string check_fs_vs_hodge(Corpus& c) {
    for (long i = 0; i < 200; ++i) {
        SpaceFamily fam = c.family();
        std::vector<long> w = c.module_weight(fam, 3);
        BFunction b = fam.b_of_weight(w);
        Rational alpha = make_rational(c.pick(1, 16), 4);
        long k = c.pick(0, 8);
        PiSets pi = PiSets::structure_sheaf(r_lambda(b), k, k);
        if (fs_hodge_test(b, alpha, pi, k) != (hodge_level(b, alpha) <= k))
            return fail("fs_hodge_test with Pi_k = {r+1..k} disagrees with the Hodge level");
    }
    return {};
}

std::string check_t_dt_round_trip(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        Rational alpha = c.alpha_on_quarter_grid();
        PFunction p = p_function(b, alpha);
        PFunction up = t_action(p);
        if (up.poly != p_function(b.shifted(1), Rational(alpha + 1)).poly)
            return fail("t action does not match the shifted p-function");
        DtAction down = dt_action(up);
        if (!down.s_factor || down.p.poly != p.poly || down.p.alpha != alpha)
            return fail("t then dt does not reproduce s * p");
    }
    return {};
}

std::string check_fdf_matrices(Corpus& c) {
    for (long i = 0; i < c.cases; ++i) {
        BFunction b = c.bfunction();
        Rational alpha = c.alpha_on_quarter_grid();
        long nu_val = nu(b, alpha);
        long ell = c.pick(-nu_val + 1, 6);
        FdfMatrices m = fdf_matrices(b, alpha, ell);
        if (m.rho == 0) {
            // C is square with b(-alpha) != 0 on the diagonal: invertible
            if (m.nu_level != m.mu_level) return fail("rho = 0 but C is not square");
            if (m.nu_level > 0 && rank(m.df) != m.nu_level)
                return fail("rho = 0 but the df matrix is singular");
        }
        if (ell >= nu_val - 1 && m.nu_level - m.rho > 0) {
            // paper remark: high enough level makes C invertible
            Mat cpart(m.mu_level, Vec(m.nu_level - m.rho));
            for (long r = 0; r < m.mu_level; ++r)
                for (long cc = 0; cc < m.nu_level - m.rho; ++cc) cpart[r][cc] = m.df[cc + m.rho][r];
            if (rank(cpart) != std::min(m.mu_level, m.nu_level - m.rho))
                return fail("C is not of full rank at high weight level");
        }
    }
    return {};
}

// ---- spaces -------------------------------------------------------------

std::string check_ideal_routes_agree(Corpus& c) {
    for (const char* name : {"det", "symdet", "pfaffian", "e6"}) {
        SpaceFamily fam = SpaceFamily::builtin(name, std::string(name) == "pfaffian" ? 4 : 3);
        for (long k = 0; k <= 3; ++k) {
            for (long j = 1; j <= 4; ++j) {
                Rational alpha = make_rational(j, 4);
                try {
                    ideal_weight_set(fam, k, alpha, 4, IdealRoute::both);
                } catch (const inconsistency_error& e) {
                    return fail(e.what());
                }
            }
        }
    }
    (void)c;
    return {};
}

std::string check_ideal_monotonicity(Corpus& c) {
    for (long i = 0; i < c.cases / 10 + 1; ++i) {
        SpaceFamily fam = c.family();
        long k = c.pick(0, 4);
        Rational alpha = make_rational(c.pick(1, 8), 4);
        auto weights = ideal_weight_set(fam, k, alpha, 3).weights;
        auto smaller_k = ideal_weight_set(fam, k + 1, alpha, 3).weights;
        // Hodge ideals decrease in k and in alpha.
        for (const auto& w : smaller_k)
            if (std::find(weights.begin(), weights.end(), w) == weights.end())
                return fail("I_{k+1} not contained in I_k for " + fam.name());
        auto smaller_alpha = ideal_weight_set(fam, k, Rational(alpha + make_rational(1, 4)), 3).weights;
        for (const auto& w : smaller_alpha)
            if (std::find(weights.begin(), weights.end(), w) == weights.end())
                return fail("membership is not antitone in alpha for " + fam.name());
    }
    return {};
}

std::string check_left_continuity(Corpus& c) {
    for (long i = 0; i < c.cases / 5 + 1; ++i) {
        SpaceFamily fam = c.family();
        std::vector<long> w = c.module_weight(fam, 3);
        if (!fam.is_ring_weight(w)) continue;
        BFunction b = fam.b_of_weight(w);
        long k = c.pick(0, 4);
        // test on the jump lattice: alpha + k a jump value of this b-function
        for (const auto& lam : b.lambdas()) {
            Rational alpha = lam + c.pick(0, 2) - k;
            if (!(alpha > 0) || alpha > 4) continue;
            // epsilon below the minimal jump gap: classes live on quarter
            // integers at worst in these families, so 1/8 is safely inside
            Rational eps(1, 8);
            bool at = ideal_weight_membership(fam, k, alpha, w);
            bool below = ideal_weight_membership(fam, k, Rational(alpha - eps), w);
            if (at != below)
                return fail("Hodge ideal membership is not left continuous at alpha = " +
                            rational_to_string(alpha));
        }
    }
    return {};
}

std::string check_character_modes(Corpus& c) {
    for (long i = 0; i < c.cases / 25 + 1; ++i) {
        SpaceFamily fam = c.family();
        Rational alpha = make_rational(c.pick(0, 8), 4);
        long box = 2;
        size_t previous = 0;
        for (long ell = 0; ell <= fam.degree(); ++ell) {
            auto weights = graded_character(fam, alpha, ell, box, CharacterMode::weight);
            if (weights.size() < previous) return fail("weight character not increasing in level");
            previous = weights.size();
        }
        if (previous != fam.module_weights(box).size())
            return fail("weight character does not exhaust the box at level d");
        for (long ell = 0; ell <= fam.degree(); ++ell)
            for (const auto& w : graded_character(fam, alpha, ell, box, CharacterMode::grW))
                if (nu(fam.b_of_weight(w), alpha) != ell)
                    return fail("grW character contains a weight with nu != level");
    }
    return {};
}

std::string check_bruteforce_stabilization(Corpus& c) {
    for (long i = 0; i < c.cases / 5 + 1; ++i) {
        RootPoly p = c.root_poly(4), q = c.root_poly(4);
        try {
            oracle::c_poly_bruteforce(p, q, /*assert_stable=*/true);
        } catch (const inconsistency_error& e) {
            return fail(e.what());
        }
    }
    return {};
}

std::string check_jordan_totals(Corpus&) {
    for (long nu_val = 0; nu_val <= 6; ++nu_val) {
        long prev = 0;
        for (long ell = -8; ell <= 8; ++ell) {
            long dim = oracle::jordan_weight_dim(nu_val, make_rational(-2, 3), ell);
            if (dim < prev || dim - prev > 1) return fail("Jordan dimensions not a 0/1 staircase");
            prev = dim;
        }
        if (prev != nu_val) return fail("Jordan model does not exhaust the module");
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, long cases, std::ostream* progress) {
    const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"ratpoly.gcd_lcm_product", check_gcd_lcm},
        {"ratpoly.shift_laws", check_shift_laws},
        {"ratpoly.pochhammer_recursion", check_pochhammer_recursion},
        {"ratpoly.dense_round_trip", check_dense_round_trip},
        {"ratpoly.expand_at_reevaluation", check_expand_at_reeval},
        {"ratpoly.solve_linear", check_solve_linear},
        {"bfun.transport_identity", check_transport_identity},
        {"bfun.transport_dual_route", check_transport_dual_route},
        {"bfun.transport_composition", check_transport_composition},
        {"bfun.c_poly_vs_bruteforce", check_c_poly_vs_bruteforce},
        {"bfun.family_shift_law", check_family_shift_law},
        {"bfun.affine_view_matches_builtin", check_affine_matches_builtin},
        {"bfun.class_count_constancy", check_class_count_constancy},
        {"bfun.builtin_symmetry", check_builtin_symmetry},
        {"filtration.p_function_vs_greedy", check_p_function_vs_greedy},
        {"filtration.greedy_tie_randomization", check_greedy_tie_randomization},
        {"filtration.nu_definitional_route", check_nu_definitional},
        {"filtration.degree_identity", check_degree_identity},
        {"filtration.p_function_structure", check_p_function_structure},
        {"filtration.grv_vs_jordan_model", check_grv_vs_jordan},
        {"filtration.grw_membership_levels", check_grw_levels},
        {"filtration.fs_test_vs_hodge_level", check_fs_vs_hodge},
        {"filtration.t_dt_round_trip", check_t_dt_round_trip},
        {"filtration.fdf_matrices", check_fdf_matrices},
        {"spaces.ideal_routes_agree", check_ideal_routes_agree},
        {"spaces.ideal_monotonicity", check_ideal_monotonicity},
        {"spaces.hodge_ideal_left_continuity", check_left_continuity},
        {"spaces.character_modes", check_character_modes},
        {"oracle.bruteforce_stabilization", check_bruteforce_stabilization},
        {"oracle.jordan_staircase", check_jordan_totals},
    };

    std::vector<CheckResult> results;
    for (const auto& [name, fn] : checks) {
        Corpus corpus(seed ^ std::hash<std::string>{}(name), cases);
        CheckResult result;
        result.name = name;
        try {
            result.detail = fn(corpus);
            result.pass = result.detail.empty();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = e.what();
        }
        if (progress)
            *progress << (result.pass ? "ok   " : "FAIL ") << result.name
                      << (result.detail.empty() ? "" : ": " + result.detail) << "\n";
        results.push_back(std::move(result));
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace vfilt
