// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/vertex.hpp"

#include <utility>

namespace repsym {

FockState creation(int n, const FockState& state, int D) {
    if (n < 1) throw UsageError("creation: n must be >= 1");
    return to_symfunc(ps_times_p(n, to_poly(state), D));
}

FockState annihilation(int n, const FockState& state) {
    if (n < 1) throw UsageError("annihilation: n must be >= 1");
    return to_symfunc(ps_scale(ps_derivative(n, to_poly(state)), Rational(n)));
}

FockState deformed_adjoint(int n, const DeformationParams& params, const FockState& state) {
    if (n < 1) throw UsageError("deformed_adjoint: n must be >= 1");
    return to_symfunc(ps_scale(ps_derivative(n, to_poly(state)), Rational(n) * xi_value(n, params)));
}

namespace {

using Laurent = std::map<int, PowerSumPoly<Rational>>;

void add_into(Laurent& acc, int e, const PowerSumPoly<Rational>& f, const Rational& c) {
    if (f.empty()) return;
    auto& slot = acc[e];
    slot = ps_add(std::move(slot), f, c);
    if (slot.empty()) acc.erase(e);
}

}  // namespace

std::map<int, FockState> vertex_simple(const Rational& alpha, const FockState& state, int D) {
    if (D < 0) throw UsageError("vertex_simple: D must be >= 0");
    PowerSumPoly<Rational> f;
    for (const auto& [rho, c] : to_poly(state))
        if (rho.weight() <= D) f.emplace(rho, c);
    // exp(-alpha sum_k z^{-k} d/dp_k)
    Laurent annihilated{{0, f}}, cur = annihilated;
    for (int j = 1; !cur.empty(); ++j) {
        Laurent next;
        for (const auto& [e, g] : cur) {
            int top = 0;
            for (const auto& [rho, c] : g) top = std::max(top, rho.weight());
            for (int k = 1; k <= top; ++k) add_into(next, e - k, ps_derivative(k, g), -alpha / Rational(j));
        }
        for (const auto& [e, g] : next) add_into(annihilated, e, g, Rational(1));
        cur = std::move(next);
    }
    // exp(alpha sum_k z^k p_k / k), cut at weight D
    Laurent out = annihilated;
    cur = annihilated;
    for (int j = 1; j <= D && !cur.empty(); ++j) {
        Laurent next;
        for (const auto& [e, g] : cur)
            for (int k = 1; k <= D; ++k) add_into(next, e + k, ps_times_p(k, g, D), alpha / Rational(static_cast<long>(k) * j));
        for (const auto& [e, g] : next) add_into(out, e, g, Rational(1));
        cur = std::move(next);
    }
    std::map<int, FockState> result;
    for (const auto& [e, g] : out)
        if (!g.empty()) result.emplace(e, to_symfunc(g));
    return result;
}

Rational dim_sigma(const Partition& sigma, const Rational& alpha) {
    Rational out(1);
    for (int i = 0; i < sigma.length(); ++i)
        for (int j = 0; j < sigma[static_cast<std::size_t>(i)]; ++j)
            out *= (alpha + Rational(j - i)) / Rational(hook_length(sigma, i, j));
    return out;
}

// ------------------------------------------------------------ specs

namespace {

std::vector<std::string> numbered(const char* stem, std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

}  // namespace

VertexSpec VertexSpec::graded(std::vector<Rational> tau, std::vector<Rational> eta, DeformationParams xi, int bound) {
    VertexSpec s;
    s.z_names = numbered("z", tau.size());
    s.w_names = numbered("w", eta.size());
    std::vector<std::string> all = s.z_names;
    all.insert(all.end(), s.w_names.begin(), s.w_names.end());
    s.ring = SeriesRing::make(all, bound);
    s.tau = std::move(tau);
    s.eta = std::move(eta);
    s.xi = std::move(xi);
    return s;
}

VertexSpec VertexSpec::weighted(std::vector<Rational> tau, std::vector<Rational> eta, DeformationParams xi,
                                std::vector<std::string> formal, int D) {
    VertexSpec s;
    s.z_names = numbered("z", tau.size());
    s.w_names = numbered("w", eta.size());
    std::vector<std::string> all = formal;
    std::vector<int> weights(formal.size(), 1), caps(formal.size(), SeriesRing::kNoCap);
    for (const auto* names : {&s.z_names, &s.w_names})
        for (const auto& n : *names) {
            all.push_back(n);
            weights.push_back(0);
            caps.push_back(D);
        }
    s.ring = SeriesRing::make(all, D, weights, caps);
    s.tau = std::move(tau);
    s.eta = std::move(eta);
    s.xi = std::move(xi);
    return s;
}

namespace {

Alphabet weighted_alphabet(const RingPtr& ring, const std::vector<std::string>& names, const std::vector<Rational>& w) {
    Alphabet a(ring);
    for (std::size_t i = 0; i < names.size(); ++i) a = a + Alphabet::letter(ring, Series::variable(ring, names[i]), w[i]);
    return a;
}

template <class K>
PowerSumPoly<Series> lift_poly(const PowerSumPoly<K>& f) {
    PowerSumPoly<Series> out;
    for (const auto& [rho, c] : f) out.emplace(rho, Series(c));
    return out;
}

// Skew functions P_{lambda/mu}, Q_{lambda/mu} for all |lambda| <= D, from one
// pass over the structure constants.
template <class K>
struct SkewTable {
    std::map<std::pair<Partition, Partition>, PowerSumPoly<K>> P, Q;
};

template <class K>
SkewTable<K> skew_table(const KerovBasis<K>& basis, int D) {
    SkewTable<K> t;
    for (int a = 0; a <= D; ++a)
        for (int b = 0; a + b <= D; ++b)
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& nu : enumerate_partitions(b)) {
                    for (const auto& [lam, f] : basis.structure_constants(mu, nu)) {
                        auto& q = t.Q[{lam, mu}];
                        q = ps_add(std::move(q), basis.Q(nu), f);
                        auto& p = t.P[{lam, mu}];
                        p = ps_add(std::move(p), basis.P(nu), f * basis.b(mu) * basis.b(nu) / basis.b(lam));
                    }
                }
    return t;
}

template <class K>
const PowerSumPoly<K>& lookup(const std::map<std::pair<Partition, Partition>, PowerSumPoly<K>>& m,
                              const Partition& a, const Partition& b) {
    static const PowerSumPoly<K> empty;
    auto it = m.find({a, b});
    return it == m.end() ? empty : it->second;
}

}  // namespace

Alphabet VertexSpec::creation_alphabet() const { return weighted_alphabet(ring, z_names, tau); }
Alphabet VertexSpec::annihilation_alphabet() const { return weighted_alphabet(ring, w_names, eta); }

// ------------------------------------------------------------ matrix elements

MatrixElement vertex_matrix_element(const Partition& mu, const Partition& nu, const VertexSpec& spec) {
    const int dm = mu.weight(), dn = nu.weight();
    DeformedBasis basis = make_basis(spec.xi, std::max(dm, dn));
    const Alphabet Z = spec.creation_alphabet(), W = spec.annihilation_alphabet();
    MatrixElement out;

    // exp(sum_m p_m(W)/(m xi_m) D(p_m)) Q_nu, with D(p_m) = m xi_m d/dp_m.
    PowerSumPoly<Series> g = lift_poly(basis.Q(nu)), cur = g;
    for (int k = 1; !cur.empty(); ++k) {
        PowerSumPoly<Series> next;
        for (int m = 1; m <= dn; ++m) {
            Rational mx = Rational(m) * basis.xi(m);
            auto d = ps_scale(ps_derivative(m, cur), Series(mx));
            next = ps_add(std::move(next), d, W.power_sum(m) * (mx * Rational(k)).inverse());
        }
        g = ps_add(std::move(g), next);
        cur = std::move(next);
    }
    // exp(sum_m p_m(Z)/(m xi_m) p_m), weight <= |mu|.
    PowerSumPoly<Series> B, E{{Partition(), Series(1)}}, term = E;
    for (int m = 1; m <= dm; ++m) B.emplace(Partition{m}, Z.power_sum(m) * (Rational(m) * basis.xi(m)).inverse());
    for (int k = 1; k <= dm; ++k) {
        term = ps_scale(ps_mul(term, B, dm), Series(Rational(1, k)));
        E = ps_add(std::move(E), term);
    }
    PowerSumPoly<Series> state = ps_mul(E, g, dm);
    out.direct = Series::zero(spec.ring);
    for (const auto& [rho, c] : basis.P(mu)) {
        auto it = state.find(rho);
        if (it != state.end()) out.direct += it->second * (c * basis.norm_of(rho));
    }

    out.via_skew = Series::zero(spec.ring);
    for (int k = 0; k <= std::min(dm, dn); ++k)
        for (const auto& zeta : enumerate_partitions(k)) {
            if (!contains(mu, zeta) || !contains(nu, zeta)) continue;
            out.via_skew += evaluate_poly(basis.skew_P(mu, zeta), Z) * evaluate_poly(basis.skew_Q(nu, zeta), W);
        }
    out.consistent = out.direct == out.via_skew;
    out.value = out.via_skew;
    return out;
}

// ------------------------------------------------------------ traces

namespace {

// sum_{|mu| <= D, nu} weight(|mu|, |nu|) P_{mu/nu}(Z) Q_{mu/nu}(W)
template <class Weight>
Series weighted_trace(const VertexSpec& spec, const DeformedBasis& basis, const SkewTable<Rational>& tab, int D,
                      Weight weight) {
    const Alphabet Z = spec.creation_alphabet(), W = spec.annihilation_alphabet();
    Series out = Series::zero(spec.ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m) {
                Series w = weight(n, m);
                if (w.is_zero()) continue;
                for (const auto& nu : enumerate_partitions(m)) {
                    const auto& sp = lookup(tab.P, mu, nu);
                    if (sp.empty()) continue;
                    Series a = evaluate_poly(sp, Z);
                    if (a.is_zero()) continue;
                    out += w * a * evaluate_poly(lookup(tab.Q, mu, nu), W);
                }
            }
    (void)basis;
    return out;
}

Series power(const Series& x, int n) { return n == 0 ? Series(1) : x.pow(static_cast<long>(n)); }

}  // namespace

Series vertex_trace(const VertexSpec& spec, const Series& p, const Series& r, int D) {
    if (D < 0) throw UsageError("vertex_trace: D must be >= 0");
    DeformedBasis basis = make_basis(spec.xi, D);
    auto tab = skew_table(basis, D);
    return weighted_trace(spec, basis, tab, D, [&](int n, int m) { return power(p, n) * power(r, m); });
}

Series trace_kernel(const VertexSpec& spec, const Series& p, int D) {
    const Alphabet Z = spec.creation_alphabet(), W = spec.annihilation_alphabet();
    Series arg = Series::zero(spec.ring);
    for (int n = 1; n <= D; ++n)
        arg += power(p, n) * Z.power_sum(n) * W.power_sum(n) * (Rational(n) * xi_value(n, spec.xi)).inverse();
    return arg.exp();
}

Series vertex_A(const Partition& lambda, const Partition& mu, const VertexSpec& spec, const Series& p, int D) {
    DeformedBasis basis = make_basis(spec.xi, D);
    auto tab = skew_table(basis, D);
    const Alphabet Z = spec.creation_alphabet(), W = spec.annihilation_alphabet();
    Series out = Series::zero(spec.ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& zeta : enumerate_partitions(n)) {
            const auto& a = lookup(tab.P, zeta, lambda);
            const auto& b = lookup(tab.Q, zeta, mu);
            if (a.empty() || b.empty()) continue;
            out += power(p, n) * evaluate_poly(a, Z) * evaluate_poly(b, W);
        }
    return out;
}

Series vertex_A_closed(const Partition& lambda, const Partition& mu, const VertexSpec& spec, const Series& p, int D) {
    const int top = std::max(lambda.weight(), mu.weight());
    DeformedBasis basis = make_basis(spec.xi, std::max(D, top));
    const Alphabet Z = spec.creation_alphabet(), W = spec.annihilation_alphabet();
    Series sum = Series::zero(spec.ring);
    for (int k = 0; k <= std::min(lambda.weight(), mu.weight()); ++k)
        for (const auto& sigma : enumerate_partitions(k)) {
            if (!contains(mu, sigma) || !contains(lambda, sigma)) continue;
            sum += power(p, lambda.weight() + mu.weight() - k) * evaluate_poly(basis.skew_P(mu, sigma), Z) *
                   evaluate_poly(basis.skew_Q(lambda, sigma), W);
        }
    return trace_kernel(spec, p, D) * sum;
}

TraceReadings trace_functional_readings(const VertexSpec& spec, const Series& p, const Rational& r, int D) {
    if (p.is_scalar() || !p.constant_term().is_zero())
        throw UsageError("trace_functional_readings: p must be a formal variable of the VertexSpec ring");
    DeformedBasis basis = make_basis(spec.xi, D);
    auto tab = skew_table(basis, D);
    TraceReadings out;
    out.lhs = weighted_trace(spec, basis, tab, D, [&](int n, int m) { return power(p, n) * r.pow(m); });
    Series J = trace_kernel(spec, p, D);
    Series first = weighted_trace(spec, basis, tab, D, [&](int n, int m) { return power(p, 2 * n - m) * r.pow(n); });
    Series second = weighted_trace(spec, basis, tab, D, [&](int n, int m) { return power(p, n + 2 * m) * r.pow(m); });
    out.first_slot_rp2 = out.lhs == J * first;
    out.second_slot_rp2 = out.lhs == J * second;
    return out;
}

// ------------------------------------------------------------ Hall-Littlewood trace

namespace {

// (1 - u)^c by the generalized binomial series.
Series binomial_series(const Series& u, const Rational& c) {
    Series out = Series::constant(u.ring(), 1), up = Series::constant(u.ring(), 1);
    for (int k = 1;; ++k) {
        up *= -u;
        if (up.is_zero()) break;
        out += up * binomial(c, k);
    }
    return out;
}

}  // namespace

HLTraceReport hl_trace_identity_check(const Rational& a, const Rational& b, const Rational& t, const Rational& e,
                                      int nx, int ny, int nw, int nz, int D) {
    if (D < 0 || nx < 0 || ny < 0 || nw < 0 || nz < 0) throw UsageError("hl_trace_identity_check: negative size");
    std::vector<std::string> names{"q"};
    std::vector<int> weights{1}, caps{SeriesRing::kNoCap};
    std::map<char, std::vector<std::string>> alph;
    for (auto [stem, n] : {std::pair{'x', nx}, std::pair{'y', ny}, std::pair{'w', nw}, std::pair{'z', nz}})
        for (int i = 1; i <= n; ++i) {
            std::string v = std::string(1, stem) + std::to_string(i);
            alph[stem].push_back(v);
            names.push_back(v);
            weights.push_back(0);
            caps.push_back(D);
        }
    RingPtr ring = SeriesRing::make(names, D, weights, caps);
    Series q = Series::variable(ring, "q");
    KerovBasis<Series> basis([&](int n) { return (Series(1) - q.pow(static_cast<long>(n))).inverse(); }, D);
    auto tab = skew_table(basis, D);

    auto alphabet = [&](char stem, const Rational& w) { return Alphabet::of_variables(ring, alph[stem]).replicated(w); };
    Alphabet A = alphabet('x', a) + alphabet('y', b), B = alphabet('w', t) + alphabet('z', e);
    HLTraceReport rep;
    rep.lhs = Series::zero(ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const auto& nu : enumerate_partitions(m)) {
                    const auto& sp = lookup(tab.P, mu, nu);
                    if (sp.empty()) continue;
                    rep.lhs += power(q, n) * evaluate_poly(sp, A) * evaluate_poly(lookup(tab.Q, mu, nu), B);
                }

    rep.rhs = Series::constant(ring, 1);
    for (int n = 1; n <= D; ++n) rep.rhs *= (Series(1) - q.pow(static_cast<long>(n))).inverse();
    auto pairs = [&](char s1, const Rational& w1, char s2, const Rational& w2) {
        for (const auto& u : alph[s1])
            for (const auto& v : alph[s2])
                rep.rhs *= binomial_series(q * Series::variable(ring, u) * Series::variable(ring, v), -(w1 * w2));
    };
    pairs('x', a, 'w', t);
    pairs('x', a, 'z', e);
    pairs('y', b, 'w', t);
    pairs('y', b, 'z', e);

    Series diff = rep.lhs - rep.rhs;
    rep.ok = diff.is_zero();
    for (const auto& [mono, c] : diff.terms())
        if (rep.first_mismatch < 0 || mono[0] < rep.first_mismatch) rep.first_mismatch = mono[0];
    return rep;
}

}  // namespace repsym
