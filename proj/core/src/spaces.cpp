#include "vfilt/spaces.hpp"

#include "vfilt/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace vfilt {

namespace {

AffineBFamily staircase_family(const std::string& name, long dim, long d, long generators,
                               std::vector<Rational> r) {
    // All four built-ins have c_{ij} = [j >= i] in semigroup coordinates,
    // with generator degrees 1..k and sigma the last generator.
    AffineBFamily fam;
    fam.name = name;
    fam.dimension = dim;
    fam.d = d;
    fam.generators = generators;
    for (long j = 1; j <= generators; ++j) fam.degrees.push_back(j);
    fam.sigma_index = generators - 1;
    fam.r = std::move(r);
    fam.c.assign(d, std::vector<Rational>(generators, Rational(0)));
    for (long i = 0; i < d; ++i)
        for (long j = i; j < generators; ++j) fam.c[i][j] = 1;
    fam.validate();
    return fam;
}

}  // namespace

SpaceFamily SpaceFamily::builtin(const std::string& name, long n) {
    SpaceFamily fam;
    fam.name_ = name;
    fam.n_ = n;
    if (name == "det") {
        if (n < 1) throw std::invalid_argument("det requires n >= 1");
        fam.kind_ = SpaceKind::det;
        fam.dimension_ = n * n;
        fam.degree_ = n;
        fam.arity_ = n;
        fam.sigma_.assign(n, 1);
        std::vector<Rational> r;
        for (long i = 1; i <= n; ++i) r.emplace_back(1 + n - i);
        fam.affine_ = staircase_family("det", n * n, n, n, std::move(r));
    } else if (name == "symdet") {
        if (n < 1) throw std::invalid_argument("symdet requires n >= 1");
        fam.kind_ = SpaceKind::symdet;
        fam.dimension_ = n * (n + 1) / 2;
        fam.degree_ = n;
        fam.arity_ = n;
        fam.sigma_.assign(n, 2);
        std::vector<Rational> r;
        for (long i = 1; i <= n; ++i) r.push_back(1 + make_rational(n - i, 2));
        fam.affine_ = staircase_family("symdet", fam.dimension_, n, n, std::move(r));
    } else if (name == "pfaffian") {
        if (n < 2 || n % 2 != 0) throw std::invalid_argument("pfaffian requires even n >= 2");
        fam.kind_ = SpaceKind::pfaffian;
        fam.dimension_ = n * (n - 1) / 2;
        fam.degree_ = n / 2;
        fam.arity_ = n;
        fam.sigma_.assign(n, 1);
        std::vector<Rational> r;
        for (long i = 1; i <= n / 2; ++i) r.emplace_back(1 + n - 2 * i);
        fam.affine_ = staircase_family("pfaffian", fam.dimension_, n / 2, n / 2, std::move(r));
    } else if (name == "e6") {
        // n is ignored: X is the 27-dimensional fundamental representation.
        fam.kind_ = SpaceKind::e6;
        fam.n_ = 27;
        fam.dimension_ = 27;
        fam.degree_ = 3;
        fam.arity_ = 3;
        fam.sigma_ = {0, 0, 1};
        // descending so the staircase rows pair up: 9 + a1+a2+a3, 5 + a2+a3,
        // 1 + a3
        fam.affine_ = staircase_family("e6", 27, 3, 3,
                                       {Rational(9), Rational(5), Rational(1)});
    } else {
        throw std::invalid_argument("unknown space '" + name +
                                    "' (expected det, symdet, pfaffian or e6)");
    }
    return fam;
}

SpaceFamily SpaceFamily::from_affine(AffineBFamily source) {
    source.validate();
    {
        // load-time sample check of root-class constancy: origin moves along
        // single and paired generators, with the sigma coordinate negative too
        std::vector<std::vector<long>> samples;
        for (long j = 0; j < source.generators; ++j) {
            for (long step = 1; step <= 3; ++step) {
                std::vector<long> a(source.generators, 0);
                a[j] = step;
                samples.push_back(a);
                if (j == source.sigma_index) {
                    a[j] = -step;
                    samples.push_back(a);
                }
            }
            for (long l = j; l < source.generators; ++l) {
                std::vector<long> a(source.generators, 0);
                a[j] += 1;
                a[l] += 1;
                samples.push_back(a);
            }
        }
        source.validate_class_constancy(samples);
    }
    SpaceFamily fam;
    fam.kind_ = SpaceKind::custom;
    fam.name_ = source.name.empty() ? "custom" : source.name;
    fam.n_ = source.dimension;
    fam.dimension_ = source.dimension;
    fam.degree_ = source.d;
    fam.arity_ = source.generators;
    fam.sigma_.assign(source.generators, 0);
    fam.sigma_[source.sigma_index] = 1;
    fam.affine_ = std::move(source);
    return fam;
}

bool SpaceFamily::is_module_weight(std::span<const long> w) const {
    if (static_cast<long>(w.size()) != arity_) return false;
    switch (kind_) {
        case SpaceKind::det:
            for (long i = 0; i + 1 < arity_; ++i)
                if (w[i] < w[i + 1]) return false;
            return true;
        case SpaceKind::symdet:
            for (long i = 0; i < arity_; ++i)
                if (w[i] % 2 != 0) return false;
            for (long i = 0; i + 1 < arity_; ++i)
                if (w[i] < w[i + 1]) return false;
            return true;
        case SpaceKind::pfaffian:
            for (long i = 0; i + 1 < arity_; i += 2)
                if (w[i] != w[i + 1]) return false;
            for (long i = 0; i + 1 < arity_; ++i)
                if (w[i] < w[i + 1]) return false;
            return true;
        case SpaceKind::e6:
        case SpaceKind::custom:
            return affine_.valid_coordinates(w);
    }
    return false;
}

bool SpaceFamily::is_ring_weight(std::span<const long> w) const {
    if (!is_module_weight(w)) return false;
    switch (kind_) {
        case SpaceKind::det:
        case SpaceKind::symdet:
        case SpaceKind::pfaffian:
            return w[arity_ - 1] >= 0;
        case SpaceKind::e6:
        case SpaceKind::custom:
            return w[affine_.sigma_index] >= 0;
    }
    return false;
}

void SpaceFamily::require_module_weight(std::span<const long> w) const {
    if (is_module_weight(w)) return;
    std::ostringstream msg;
    msg << "weight (";
    for (size_t i = 0; i < w.size(); ++i) msg << (i ? "," : "") << w[i];
    msg << ") is not a valid " << name_ << " weight";
    switch (kind_) {
        case SpaceKind::det: msg << " (need " << arity_ << " weakly decreasing integers)"; break;
        case SpaceKind::symdet:
            msg << " (need " << arity_ << " weakly decreasing even integers)";
            break;
        case SpaceKind::pfaffian:
            msg << " (need " << arity_ << " weakly decreasing integers with p_{2i-1} = p_{2i})";
            break;
        default: msg << " (need " << arity_ << " semigroup coordinates, nonnegative off sigma)";
    }
    throw std::invalid_argument(msg.str());
}

BFunction SpaceFamily::b_of_weight(std::span<const long> w) const {
    require_module_weight(w);
    const long n = n_;
    std::vector<Rational> lambdas;
    switch (kind_) {
        case SpaceKind::det:
            for (long i = 1; i <= n; ++i) lambdas.emplace_back(1 + w[i - 1] + n - i);
            break;
        case SpaceKind::symdet:
            for (long i = 1; i <= n; ++i) lambdas.push_back(1 + make_rational(w[i - 1] + n - i, 2));
            break;
        case SpaceKind::pfaffian:
            for (long i = 1; i <= n / 2; ++i) lambdas.emplace_back(1 + w[2 * i - 1] + n - 2 * i);
            break;
        case SpaceKind::e6:
        case SpaceKind::custom:
            return affine_.eval(w);
    }
    return BFunction::from_lambdas(lambdas);
}

namespace {

// Weakly decreasing sequences of the given length with values in [lo, hi],
// optionally restricted to even values.
void dominant_sequences(long length, long lo, long hi, bool even,
                        std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (static_cast<long>(current.size()) == length) {
        out.push_back(current);
        return;
    }
    long top = current.empty() ? hi : std::min(hi, current.back());
    for (long v = top; v >= lo; --v) {
        if (even && v % 2 != 0) continue;
        current.push_back(v);
        dominant_sequences(length, lo, hi, even, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> SpaceFamily::module_weights(long bound) const {
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    switch (kind_) {
        case SpaceKind::det:
            dominant_sequences(arity_, -bound, bound, false, current, out);
            break;
        case SpaceKind::symdet:
            dominant_sequences(arity_, -bound, bound, true, current, out);
            break;
        case SpaceKind::pfaffian: {
            std::vector<std::vector<long>> halves;
            dominant_sequences(arity_ / 2, -bound, bound, false, current, halves);
            for (const auto& h : halves) {
                std::vector<long> w;
                for (long v : h) {
                    w.push_back(v);
                    w.push_back(v);
                }
                out.push_back(std::move(w));
            }
            break;
        }
        case SpaceKind::e6:
        case SpaceKind::custom:
            out = coordinate_box(affine_, bound);
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> SpaceFamily::ring_weights(long bound) const {
    std::vector<std::vector<long>> out;
    for (auto& w : module_weights(bound))
        if (is_ring_weight(w)) out.push_back(std::move(w));
    return out;
}

std::vector<long> SpaceFamily::weight_of_coordinates(std::span<const long> a) const {
    if (!affine_.valid_coordinates(a))
        throw std::invalid_argument("invalid semigroup coordinates for " + name_);
    std::vector<long> w;
    switch (kind_) {
        case SpaceKind::det:
        case SpaceKind::symdet: {
            long scale = kind_ == SpaceKind::symdet ? 2 : 1;
            for (long i = 0; i < arity_; ++i) {
                long sum = 0;
                for (long j = i; j < arity_; ++j) sum += a[j];
                w.push_back(scale * sum);
            }
            break;
        }
        case SpaceKind::pfaffian:
            for (long i = 0; i < arity_ / 2; ++i) {
                long sum = 0;
                for (long j = i; j < arity_ / 2; ++j) sum += a[j];
                w.push_back(sum);
                w.push_back(sum);
            }
            break;
        case SpaceKind::e6:
        case SpaceKind::custom:
            w.assign(a.begin(), a.end());
            break;
    }
    return w;
}

std::vector<long> SpaceFamily::dual_coordinates(std::span<const long> a) const {
    if (!has_dual())
        throw std::invalid_argument("no duality data for custom space '" + name_ + "'");
    // Reverse the non-sigma generators and send sigma to minus the total:
    // the highest weight of the dual representation in semigroup coordinates.
    const long k = affine_.generators;
    std::vector<long> out(k);
    long total = 0;
    for (long j = 0; j < k; ++j) total += a[j];
    for (long j = 0; j + 1 < k; ++j) out[j] = a[k - 2 - j];
    out[k - 1] = -total;
    return out;
}

bool SpaceFamily::inequality_route_available(const Rational& alpha) const {
    return kind_ != SpaceKind::custom && alpha > 0 && alpha <= 1;
}

std::vector<Rational> SpaceFamily::tail_bounds(long k, const Rational& alpha) const {
    if (!inequality_route_available(alpha))
        throw std::invalid_argument("inequality route needs a built-in family and 0 < alpha <= 1");
    std::vector<Rational> bounds;  // indexed by t - 1
    switch (kind_) {
        case SpaceKind::det:
            // sum_{i=t}^n p_i >= (n-t)(k-1) - C(n-t,2)
            for (long t = 1; t <= n_; ++t) {
                long u = n_ - t;
                bounds.emplace_back(u * (k - 1) - u * (u - 1) / 2);
            }
            break;
        case SpaceKind::symdet:
            // From the exact ceilings of alpha + k - lambda_i: with u = n-t,
            // o = ceil(u/2) half-integer classes in the tail,
            //   sum_{i=t}^n p_i >= 2uk - u(u+1)/2*2/... see below.
            for (long t = 1; t <= n_; ++t) {
                long u = n_ - t;
                long o = (u + 1) / 2;
                long tri = u * (u + 1) / 2;
                long e = 2 * u * k - tri - o;  // alpha in (0, 1/2]
                if (2 * alpha > 1) e += 2 * o;  // alpha in (1/2, 1]
                bounds.emplace_back(e);
            }
            break;
        case SpaceKind::pfaffian:
            // sum_{i=t}^{n/2} p_{2i} >= (n/2-t)(k-1) - (n/2-t)^2
            for (long t = 1; t <= n_ / 2; ++t) {
                long u = n_ / 2 - t;
                bounds.emplace_back(u * (k - 1) - u * u);
            }
            break;
        case SpaceKind::e6:
            // b3 >= 0, b2 + b3 >= k - 4, b1 + b2 + b3 >= 2k - 12
            bounds.emplace_back(0);
            bounds.emplace_back(k - 4);
            bounds.emplace_back(2 * k - 12);
            break;
        case SpaceKind::custom:
            break;
    }
    return bounds;
}

long SpaceFamily::tail_sum(std::span<const long> w, long t) const {
    long sum = 0;
    switch (kind_) {
        case SpaceKind::det:
        case SpaceKind::symdet:
            for (long i = t; i <= n_; ++i) sum += w[i - 1];
            break;
        case SpaceKind::pfaffian:
            for (long i = t; i <= n_ / 2; ++i) sum += w[2 * i - 1];
            break;
        case SpaceKind::e6: {
            // t-th inequality reads b_t + ... + b_3 with b_i the partial sums
            // of the semigroup coordinates: b_1 = a1+a2+a3, b_2 = a2+a3,
            // b_3 = a3, and the inequalities come in the order b3, b2+b3,
            // b1+b2+b3.
            long b1 = w[0] + w[1] + w[2], b2 = w[1] + w[2], b3 = w[2];
            if (t == 1) sum = b3;
            if (t == 2) sum = b2 + b3;
            if (t == 3) sum = b1 + b2 + b3;
            break;
        }
        case SpaceKind::custom:
            break;
    }
    return sum;
}

bool SpaceFamily::ideal_membership_inequality(long k, const Rational& alpha,
                                              std::span<const long> w) const {
    if (!is_ring_weight(w))
        throw std::invalid_argument("ideal membership is defined on Lambda(O_X) weights only");
    std::vector<Rational> bounds = tail_bounds(k, alpha);
    for (size_t t = 1; t <= bounds.size(); ++t)
        if (Rational(tail_sum(w, static_cast<long>(t))) < bounds[t - 1]) return false;
    return true;
}

std::vector<PrimaryComponent> SpaceFamily::primary_decomposition(long k,
                                                                 const Rational& alpha) const {
    std::vector<Rational> bounds = tail_bounds(k, alpha);
    std::vector<PrimaryComponent> out;
    switch (kind_) {
        case SpaceKind::det:
        case SpaceKind::symdet:
            // J_t with Lambda(J_t^{(e)}) = { sum_{i=t}^n p_i >= e } for det
            // and >= 2e for symdet; t = n is Lambda(O_X) itself.
            for (long t = 1; t <= n_ - 1; ++t) {
                Rational e = bounds[t - 1];
                if (kind_ == SpaceKind::symdet) e /= 2;
                out.push_back({t, std::max(0L, ceil_long(e))});
            }
            break;
        case SpaceKind::pfaffian:
            for (long t = 1; t <= n_ / 2 - 1; ++t)
                out.push_back({t, std::max(0L, ceil_long(bounds[t - 1]))});
            break;
        case SpaceKind::e6:
            out.push_back({1, std::max(0L, 2 * k - 12)});
            out.push_back({2, std::max(0L, k - 4)});
            break;
        case SpaceKind::custom:
            break;
    }
    return out;
}

std::vector<std::string> SpaceFamily::ideal_constraints(long k, const Rational& alpha) const {
    std::vector<std::string> out;
    if (!inequality_route_available(alpha)) {
        out.push_back("deg p_{lambda,alpha+k}(s) <= k");
        return out;
    }
    std::vector<Rational> bounds = tail_bounds(k, alpha);
    for (size_t t = 1; t <= bounds.size(); ++t) {
        std::ostringstream line;
        switch (kind_) {
            case SpaceKind::det:
            case SpaceKind::symdet:
                line << "p_" << t << " + ... + p_" << n_ << " >= " << rational_to_string(bounds[t - 1]);
                break;
            case SpaceKind::pfaffian:
                line << "p_" << 2 * t << " + p_" << 2 * t + 2 << " + ... + p_" << n_
                     << " >= " << rational_to_string(bounds[t - 1]);
                break;
            case SpaceKind::e6: {
                const char* lhs[] = {"b3", "b2 + b3", "b1 + b2 + b3"};
                line << lhs[t - 1] << " >= " << rational_to_string(bounds[t - 1]);
                break;
            }
            case SpaceKind::custom:
                break;
        }
        out.push_back(line.str());
    }
    return out;
}

bool ideal_weight_membership(const SpaceFamily& fam, long k, const Rational& alpha,
                             std::span<const long> w, IdealRoute route) {
    if (!(alpha > 0)) throw std::invalid_argument("ideal membership requires alpha > 0");
    if (!fam.is_ring_weight(w))
        throw std::invalid_argument("ideal membership is defined on Lambda(O_X) weights only");

    auto degree_route = [&] {
        return hodge_level(fam.b_of_weight(w), Rational(alpha + k)) <= k;
    };
    switch (route) {
        case IdealRoute::degree:
            return degree_route();
        case IdealRoute::inequality:
            return fam.ideal_membership_inequality(k, alpha, w);
        case IdealRoute::both: {
            bool by_degree = degree_route();
            bool by_ineq = fam.ideal_membership_inequality(k, alpha, w);
            if (by_degree != by_ineq) {
                std::ostringstream msg;
                msg << "ideal membership mismatch for " << fam.name() << ", k = " << k
                    << ", alpha = " << rational_to_string(alpha) << ", weight (";
                for (size_t i = 0; i < w.size(); ++i) msg << (i ? "," : "") << w[i];
                msg << "): degree route says " << (by_degree ? "member" : "non-member")
                    << ", inequality route says " << (by_ineq ? "member" : "non-member");
                throw inconsistency_error(msg.str());
            }
            return by_degree;
        }
    }
    return false;
}

WeightSet ideal_weight_set(const SpaceFamily& fam, long k, const Rational& alpha,
                           long degree_bound, IdealRoute route, int threads) {
    WeightSet set;
    set.constraints = fam.ideal_constraints(k, alpha);
    std::vector<std::vector<long>> candidates = fam.ring_weights(degree_bound);

    std::vector<char> member(candidates.size(), 0);
    auto scan = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            member[i] = ideal_weight_membership(fam, k, alpha, candidates[i], route) ? 1 : 0;
    };
    if (threads <= 1 || candidates.size() < 64) {
        scan(0, candidates.size());
    } else {
        // Disjoint slices; the merge below keeps enumeration order, so the
        // output is independent of the thread count.
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        size_t chunk = (candidates.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t begin = std::min(candidates.size(), t * chunk);
            size_t end = std::min(candidates.size(), begin + chunk);
            if (begin < end)
                pool.emplace_back([&, begin, end, t] {
                    try {
                        scan(begin, end);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    for (size_t i = 0; i < candidates.size(); ++i)
        if (member[i]) set.weights.push_back(std::move(candidates[i]));

    if (fam.inequality_route_available(alpha)) set.primary = fam.primary_decomposition(k, alpha);
    return set;
}

std::vector<std::vector<long>> graded_character(const SpaceFamily& fam, const Rational& alpha,
                                                long ell, long degree_bound, CharacterMode mode) {
    std::vector<std::vector<long>> out;
    for (auto& w : fam.module_weights(degree_bound)) {
        long nu_w = nu(fam.b_of_weight(w), alpha);
        bool keep = false;
        switch (mode) {
            case CharacterMode::weight: keep = nu_w <= ell; break;
            case CharacterMode::grW: keep = nu_w == ell; break;
            case CharacterMode::grWgrV: keep = grw_grv_membership(nu_w, ell); break;
        }
        if (keep) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace vfilt
