#include "vfilt/oracle.hpp"

#include "vfilt/dense_poly.hpp"
#include "vfilt/linear_solve.hpp"

#include <algorithm>

namespace vfilt::oracle {

namespace {

RootPoly partial_gcd(const RootPoly& p, const RootPoly& q, long terms) {
    RootPoly g = p;          // the i = 0 term
    RootPoly term = p;       // p(s+i) * prod_{j<i} q(s+j), maintained incrementally
    RootPoly qprod;          // prod_{j<i} q(s+j)
    for (long i = 1; i <= terms; ++i) {
        qprod *= q.shifted(Rational(i - 1));
        term = p.shifted(Rational(i)) * qprod;
        g = RootPoly::gcd(g, term);
        if (g.is_one()) break;
    }
    return g;
}

long stabilization_bound(const RootPoly& p, const RootPoly& q) {
    // Largest nonnegative integer difference r' - r with r a root of p and
    // r' a root of p or q: a factor of the gcd must divide p(s), and its
    // multiplicity in later terms can only change while shifted roots of q
    // (or of p itself) still meet it.
    long spread = 0;
    for (const auto& [rp, mp] : p.roots()) {
        for (const auto& poly : {p, q}) {
            for (const auto& [ro, mo] : poly.roots()) {
                Rational diff = ro - rp;
                if (is_integer(diff) && diff >= 0)
                    spread = std::max(spread, to_long(diff.get_num()));
            }
        }
    }
    return p.degree() + spread + 2;
}

}  // namespace

RootPoly c_poly_bruteforce(const RootPoly& p, const RootPoly& q, bool assert_stable) {
    const long bound = stabilization_bound(p, q);
    RootPoly g = partial_gcd(p, q, bound);
    if (assert_stable) {
        if (g != partial_gcd(p, q, bound + 1) || g != partial_gcd(p, q, bound + 5))
            throw inconsistency_error("c_poly_bruteforce: partial gcds did not stabilize at N = " +
                                      std::to_string(bound) + " for p = " + p.to_string() +
                                      ", q = " + q.to_string());
    }
    return g;
}

namespace {

RootPoly p_function_greedy_impl(const BFunction& b, const Rational& alpha,
                                std::mt19937_64* rng) {
    RootPoly p;
    for (;;) {
        BFunction transported = transport_via_gcd(b, p);
        // Sabbah: p m f^s lies in V^alpha iff all roots of its b-function
        // are <= -alpha, i.e. every beta = lambda_i + k_i is >= alpha.
        std::vector<Rational> offending;
        for (const auto& beta : transported.lambdas())
            if (beta < alpha) offending.push_back(beta);
        if (offending.empty()) return p;
        Rational pick = offending.back();  // lambdas() ascends: the largest class rep
        if (rng) pick = offending[(*rng)() % offending.size()];
        p *= RootPoly::sfactor(pick);
    }
}

}  // namespace

RootPoly p_function_greedy(const BFunction& b, const Rational& alpha) {
    return p_function_greedy_impl(b, alpha, nullptr);
}

RootPoly p_function_greedy_random(const BFunction& b, const Rational& alpha, std::mt19937_64& rng) {
    return p_function_greedy_impl(b, alpha, &rng);
}

namespace {

// Multiplication by (s+alpha) on C[s]/(s+alpha)^nu in the monomial basis
// 1, s, ..., s^{nu-1}: multiply by s, add alpha, and reduce s^nu modulo
// (s+alpha)^nu. Nothing here assumes the Jordan structure.
Mat nilpotent_model(long nu, const Rational& alpha) {
    std::vector<Rational> reduction(nu);  // s^nu = sum reduction[i] s^i  (mod (s+alpha)^nu)
    {
        std::vector<Rational> binomial =
            RootPoly::sfactor(alpha, nu).expand().coeffs();  // (s+alpha)^nu
        for (long i = 0; i < nu; ++i) reduction[i] = -binomial[i];
    }
    Mat n(nu, Vec(nu, Rational(0)));
    for (long col = 0; col < nu; ++col) {
        // (s + alpha) * s^col
        n[col][col] += alpha;
        if (col + 1 < nu) {
            n[col + 1][col] += 1;
        } else {
            for (long i = 0; i < nu; ++i) n[i][col] += reduction[i];
        }
    }
    return n;
}

Mat mat_power(const Mat& m, long e) {
    Mat result = identity(static_cast<long>(m.size()));
    for (long i = 0; i < e; ++i) result = mat_mul(result, m);
    return result;
}

// Basis columns of ker M.
std::vector<Vec> kernel_basis(const Mat& m) {
    return solve_linear(m, Vec(m.size(), Rational(0))).null_basis;
}

// Columns of M as vectors.
std::vector<Vec> column_vectors(const Mat& m) {
    std::vector<Vec> cols;
    if (m.empty()) return cols;
    for (size_t j = 0; j < m[0].size(); ++j) {
        Vec v(m.size());
        for (size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
        cols.push_back(std::move(v));
    }
    return cols;
}

// Basis of span(a) cap span(b): solve [A | -B] x = 0 and map back through A.
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, long dim) {
    if (a.empty() || b.empty()) return {};
    Mat sys(dim, Vec(a.size() + b.size(), Rational(0)));
    for (size_t j = 0; j < a.size(); ++j)
        for (long i = 0; i < dim; ++i) sys[i][j] = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (long i = 0; i < dim; ++i) sys[i][a.size() + j] = -b[j][i];
    std::vector<Vec> out;
    for (const auto& x : kernel_basis(sys)) {
        Vec v(dim, Rational(0));
        for (size_t j = 0; j < a.size(); ++j)
            for (long i = 0; i < dim; ++i) v[i] += x[j] * a[j][i];
        out.push_back(std::move(v));
    }
    return out;
}

long span_dimension(const std::vector<Vec>& vs, long dim) {
    if (vs.empty()) return 0;
    Mat m(vs.size(), Vec(dim));
    for (size_t i = 0; i < vs.size(); ++i) m[i] = vs[i];
    return rank(std::move(m));
}

}  // namespace

long jordan_weight_dim(long nu, const Rational& alpha, long ell) {
    if (nu < 0) throw std::invalid_argument("jordan_weight_dim: nu must be nonnegative");
    if (nu == 0) return 0;
    const Mat n = nilpotent_model(nu, alpha);

    std::vector<Vec> accumulated;
    for (long i = 0; i <= nu; ++i) {  // ker N^{i+1} is everything past i = nu - 1
        const long j = ell - i;
        std::vector<Vec> ker = kernel_basis(mat_power(n, i + 1));
        std::vector<Vec> piece;
        if (-j <= 0) {
            piece = std::move(ker);  // Im N^{-j} is the whole module
        } else if (-j <= nu) {
            piece = intersect(ker, column_vectors(mat_power(n, -j)), nu);
        }  // otherwise Im N^{-j} = 0
        for (auto& v : piece) accumulated.push_back(std::move(v));
    }
    return span_dimension(accumulated, nu);
}

}  // namespace vfilt::oracle
