#include "vfilt/filtration.hpp"

#include <algorithm>
#include <sstream>

namespace vfilt {

PFunction p_function(const BFunction& b, const Rational& alpha) {
    RootPoly poly;
    for (const auto& lam : b.lambdas())
        poly *= RootPoly::pochhammer(lam, ceil_long(Rational(alpha - lam)));
    return PFunction{std::move(poly), b, alpha};
}

long nu(const BFunction& b, const Rational& alpha) {
    long count = 0;
    for (const auto& lam : b.lambdas()) {
        Rational diff = alpha - lam;
        if (is_integer(diff) && diff >= 0) ++count;
    }
    return count;
}

long weight_level(const BFunction& b, const Rational& alpha) { return nu(b, alpha); }

std::vector<Rational> jump_values_below(const BFunction& b, const Rational& alpha) {
    // nu(b, beta) > 0 exactly on { lambda_i + j : j >= 0 }, so the jump
    // values below alpha live in the integer translates of the lambda_i
    // inside [min lambda, alpha).
    std::set<Rational> jumps;
    for (const auto& lam : b.lambdas())
        for (Rational beta = lam; beta < alpha; beta += 1) jumps.insert(beta);
    return std::vector<Rational>(jumps.begin(), jumps.end());
}

long hodge_level(const BFunction& b, const Rational& alpha) {
    long by_degree = 0;
    for (const auto& lam : b.lambdas())
        by_degree += std::max<long>(ceil_long(Rational(alpha - lam)), 0);

    long by_jumps = 0;
    for (const auto& beta : jump_values_below(b, alpha)) by_jumps += nu(b, beta);

    if (by_degree != by_jumps) {
        std::ostringstream msg;
        msg << "hodge_level: deg p = " << by_degree << " but sum of nu over jumps = " << by_jumps
            << " for b = " << b.poly().to_string() << ", alpha = " << rational_to_string(alpha);
        throw inconsistency_error(msg.str());
    }
    return by_degree;
}

long r_lambda(const BFunction& b) {
    long best = -1;  // (s+1) contributes the root -1
    for (const auto& [root, mult] : b.poly().roots())
        if (is_integer(root) && root > best) best = to_long(root.get_num());
    return best;
}

RootPoly v_ideal_structure(const BFunction& b, const Rational& alpha) {
    const long r = r_lambda(b);
    RootPoly tail = RootPoly::pochhammer(Rational(-r), r + 1);  // [s - r]_{r+1}
    return RootPoly::lcm(tail, p_function(b, alpha).poly);
}

std::optional<long> hodge_jump_ell(const BFunction& b, long k) {
    for (long ell = 0; ell <= k; ++ell) {
        long deg = 0;
        for (const auto& lam : b.lambdas())
            deg += std::max<long>(ceil_long(Rational(-ell - lam)), 0);
        if (deg <= k - ell) return ell;
    }
    return std::nullopt;
}

std::vector<DensePoly> v_cap_f_basis(const BFunction& b, const Rational& alpha, long k) {
    RootPoly generator;
    if (alpha > 0) {
        generator = p_function(b, alpha).poly;
    } else {
        auto ell = hodge_jump_ell(b, k);
        if (!ell) return {};  // [s - l_k + 1]_{l_k} = 0: the intersection vanishes
        // [s - l + 1]_l = (s - l + 1)(s - l + 2)...s
        RootPoly qfactor = RootPoly::pochhammer(Rational(-*ell + 1), *ell);
        generator = RootPoly::lcm(qfactor, p_function(b, alpha).poly);
    }
    if (generator.degree() > k) return {};
    std::vector<DensePoly> basis;
    DensePoly g = generator.expand();
    for (long j = 0; j + generator.degree() <= k; ++j) basis.push_back(g.times_power(j));
    return basis;
}

long grv_exponent(long nu, long ell) {
    if (nu < 0) throw std::invalid_argument("grv_exponent: nu must be nonnegative");
    if (nu <= -ell) return 0;
    return std::min((nu + ell + 1) / 2, nu);  // nu + ell + 1 >= 2 here
}

bool grw_grv_membership(long nu, long ell) {
    return (nu + ell) % 2 != 0 && nu > std::labs(ell);
}

long nilpotency_order(const AffineBFamily& fam, const Rational& alpha,
                      const std::vector<std::vector<long>>& samples) {
    std::vector<long> origin(fam.generators, 0);
    const long order = fam.integer_class_count(alpha, origin);
    for (const auto& a : samples) {
        long got = fam.integer_class_count(alpha, a);
        if (got != order) {
            std::ostringstream msg;
            msg << "nilpotency order of family '" << fam.name << "' at alpha = "
                << rational_to_string(alpha) << " is not constant: " << order << " at the origin, "
                << got << " at a sampled weight; the family data violates the root-class "
                << "constancy constraint";
            throw inconsistency_error(msg.str());
        }
    }
    return order;
}

std::optional<long> composition_factor_test(const BFunction& b, const Rational& alpha) {
    if (b.poly().eval(Rational(-alpha)) != 0) return std::nullopt;
    return nu(b, alpha);
}

const std::set<long>& PiSets::at(long k) const {
    auto it = pi.find(k);
    if (it == pi.end())
        throw std::invalid_argument("PiSets: no data for k = " + std::to_string(k));
    return it->second;
}

void PiSets::validate(std::optional<long> d) const {
    for (const auto& [k, set] : pi) {
        for (long ell : set) {
            if (ell <= r_lambda)
                throw std::invalid_argument("PiSets: element " + std::to_string(ell) +
                                            " of Pi_" + std::to_string(k) +
                                            " is not greater than r_lambda = " +
                                            std::to_string(r_lambda));
        }
        auto next = pi.find(k + 1);
        if (next != pi.end()) {
            for (long ell : set) {
                if (!next->second.count(ell))
                    throw std::invalid_argument("PiSets: Pi_" + std::to_string(k) +
                                                " not contained in Pi_" + std::to_string(k + 1));
                if (!next->second.count(ell + 1))
                    throw std::invalid_argument("PiSets: Pi_" + std::to_string(k) +
                                                " + 1 not contained in Pi_" + std::to_string(k + 1));
            }
        }
        if (d) {
            auto far = pi.find(k + *d - 1);
            if (far != pi.end()) {
                for (long ell : set)
                    if (ell - 1 != r_lambda && !far->second.count(ell - 1))
                        throw std::invalid_argument(
                            "PiSets: Pi_" + std::to_string(k) + " - 1 not contained in Pi_" +
                            std::to_string(k + *d - 1) + " union {r_lambda}");
            }
        }
    }
}

PiSets PiSets::structure_sheaf(long r_lambda, long k_min, long k_max) {
    PiSets out;
    out.r_lambda = r_lambda;
    for (long k = k_min; k <= k_max; ++k) {
        std::set<long> set;
        for (long ell = r_lambda + 1; ell <= k; ++ell) set.insert(ell);
        out.pi[k] = std::move(set);
    }
    return out;
}

bool fs_hodge_test(const BFunction& b, const Rational& alpha, const PiSets& pi, long k) {
    if (!(alpha > 0)) throw std::invalid_argument("fs_hodge_test requires alpha > 0");
    const std::set<long>& pik = pi.at(k);
    if (pik.empty()) return false;

    const DensePoly p = p_function(b, alpha).poly.expand();
    const long deg_p = p.degree();
    const long top = *pik.rbegin();  // every span element has degree = its l
    if (top < deg_p) return false;   // deg(h*p) >= deg p > max degree in span

    // Unknowns: coefficients h_0..h_{top-deg_p} of h, then one coefficient
    // x_l per span generator [s-l+1]_l. Rows match coefficients of
    // h*p - sum_l x_l [s-l+1]_l = 0 in degrees 0..top.
    const long nh = top - deg_p + 1;
    std::vector<DensePoly> gens;
    for (long ell : pik) gens.push_back(RootPoly::pochhammer(Rational(-ell + 1), ell).expand());

    Mat a(top + 1, Vec(nh + gens.size(), Rational(0)));
    for (long j = 0; j < nh; ++j)
        for (long i = 0; i <= deg_p; ++i) a[i + j][j] = p.coeff(i);
    for (size_t g = 0; g < gens.size(); ++g)
        for (long i = 0; i <= gens[g].degree(); ++i) a[i][nh + g] = -gens[g].coeff(i);

    LinearSolution sol = solve_linear(a, Vec(top + 1, Rational(0)));
    // Solutions form a subspace; h(-alpha) != 0 is achievable iff the
    // evaluation functional is nonzero on it.
    for (const auto& v : sol.null_basis) {
        Rational value(0), power(1);
        for (long j = 0; j < nh; ++j) {
            value += v[j] * power;
            power *= Rational(-alpha);
        }
        if (value != 0) return true;
    }
    return false;
}

PFunction t_action(const PFunction& p) {
    return PFunction{p.poly.shifted(Rational(1)), p.source.shifted(1), Rational(p.alpha + 1)};
}

DtAction dt_action(const PFunction& p) {
    return DtAction{true,
                    PFunction{p.poly.shifted(Rational(-1)), p.source.shifted(-1), Rational(p.alpha - 1)}};
}

FdfMatrices fdf_matrices(const BFunction& b, const Rational& alpha, long ell) {
    const long nu_lambda = nu(b, alpha);
    if (nu_lambda <= -ell)
        throw std::invalid_argument("fdf_matrices requires nu(b, alpha) > -ell");

    FdfMatrices out;
    out.rho = b.mult_of_lambda(alpha);  // multiplicity of -alpha as root of b
    out.nu_level = grv_exponent(nu_lambda, ell);
    out.mu_level = grv_exponent(nu_lambda - out.rho, ell);  // nu at lambda + sigma

    RootPoly reduced = b.poly().exact_div(RootPoly::sfactor(alpha, out.rho));
    out.expansion = reduced.expand_at(alpha);

    // nu at lambda - sigma counts one more class member per lambda_i = alpha + 1
    const long nu_below = nu_lambda + b.mult_of_lambda(Rational(alpha + 1));
    const long src = grv_exponent(nu_below, ell);
    out.f.assign(out.nu_level, Vec(src, Rational(0)));
    for (long i = 0; i < out.nu_level; ++i) out.f[i][i] = 1;

    // [0 C]^T with C upper-triangular Toeplitz, C_{ij} = c_{j-i}
    out.df.assign(out.nu_level, Vec(out.mu_level, Rational(0)));
    for (long i = out.rho; i < out.nu_level; ++i)
        for (long j = 0; j <= i - out.rho && j < out.mu_level; ++j)
            out.df[i][j] = out.expansion[(i - out.rho) - j];
    return out;
}

}  // namespace vfilt
