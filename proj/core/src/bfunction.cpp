#include "vfilt/bfunction.hpp"

#include <algorithm>

namespace vfilt {

BFunction BFunction::from_lambdas(const std::vector<Rational>& lambdas) {
    RootPoly p;
    for (const auto& lam : lambdas) p *= RootPoly::sfactor(lam);
    return BFunction(std::move(p));
}

std::vector<Rational> BFunction::lambdas() const {
    std::vector<Rational> out;
    // roots ascend, so -root descends; collect then reverse
    for (const auto& [root, mult] : poly_.roots())
        for (long i = 0; i < mult; ++i) out.push_back(Rational(-root));
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

// Largest k with [s+a]_k dividing p, consuming the used factors.
long peel_chain(RootPoly& p, const Rational& a) {
    long k = 0;
    RootPoly used;
    while (p.mult_at(a + k) > used.mult_at(a + k)) {
        used *= RootPoly::sfactor(a + k);
        ++k;
    }
    p = p.exact_div(used);
    return k;
}

// The maximal (k_i) over the factors (s+r_i) of q dividing p, as pairs
// (r_i, k_i) with the factor multiplicity of q flattened out. Factors are
// processed in descending r_i; within one processing order the result is
// canonical, and the multiset {r_i + k_i} is order-independent (checked
// against the gcd route in the test suite).
std::vector<std::pair<Rational, long>> chain_decomposition(const RootPoly& q, const RootPoly& p) {
    std::vector<std::pair<Rational, long>> out;
    RootPoly rest = p;
    // roots() ascends by root, i.e. descends by r in (s + r)
    for (const auto& [root, mult] : q.roots()) {
        const Rational r = -root;
        for (long i = 0; i < mult; ++i) out.emplace_back(r, peel_chain(rest, r));
    }
    return out;
}

}  // namespace

RootPoly c_poly(const RootPoly& p, const RootPoly& q) {
    // Recursion from the maximal chain decomposition: pick the factor (s+r)
    // of q with the largest reachable root r + k, then
    // c_{p,q} = [s+r]_k * c_{p',q'} with p = [s+r]_k * p', q = (s+r) * q'.
    // The base case q = 1 has c = 1: every fixed linear factor eventually
    // drops out of p(s+i).
    if (q.is_one()) return RootPoly();
    auto chains = chain_decomposition(q, p);
    auto best = std::max_element(chains.begin(), chains.end(),
                                 [](const auto& x, const auto& y) {
                                     return x.first + x.second < y.first + y.second;
                                 });
    RootPoly factor = RootPoly::pochhammer(best->first, best->second);
    return factor * c_poly(p.exact_div(factor), q.exact_div(RootPoly::sfactor(best->first)));
}

BFunction transport(const BFunction& b, const RootPoly& p) {
    RootPoly out;
    for (const auto& [r, k] : chain_decomposition(b.poly(), p)) out *= RootPoly::sfactor(r + k);
    return BFunction(std::move(out));
}

BFunction transport_via_gcd(const BFunction& b, const RootPoly& p) {
    RootPoly c = c_poly(p, b.poly());
    return BFunction((b.poly() * c.shifted(Rational(1))).exact_div(c));
}

}  // namespace vfilt
