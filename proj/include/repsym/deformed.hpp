// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "repsym/error.hpp"
#include "repsym/partitions.hpp"
#include "repsym/rational.hpp"
#include "repsym/series.hpp"
#include "repsym/symfunc.hpp"

namespace repsym {

/// A symmetric function over the power sums with coefficients in K
/// (Rational, or Series when a parameter is kept formal).
template <class K>
using PowerSumPoly = std::map<Partition, K>;

namespace detail {

template <class K>
void accumulate(PowerSumPoly<K>& f, const Partition& rho, const K& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = f.try_emplace(rho, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) f.erase(it);
    }
}

}  // namespace detail

template <class K>
PowerSumPoly<K> ps_add(PowerSumPoly<K> a, const PowerSumPoly<K>& b, const K& scale = K(1)) {
    for (const auto& [rho, c] : b) detail::accumulate(a, rho, c * scale);
    return a;
}

template <class K>
PowerSumPoly<K> ps_scale(const PowerSumPoly<K>& a, const K& c) {
    PowerSumPoly<K> out;
    for (const auto& [rho, v] : a) detail::accumulate(out, rho, v * c);
    return out;
}

/// Product; terms of weight above max_weight are dropped when it is >= 0.
template <class K>
PowerSumPoly<K> ps_mul(const PowerSumPoly<K>& a, const PowerSumPoly<K>& b, int max_weight = -1) {
    PowerSumPoly<K> out;
    for (const auto& [r1, c1] : a)
        for (const auto& [r2, c2] : b) {
            if (max_weight >= 0 && r1.weight() + r2.weight() > max_weight) continue;
            detail::accumulate(out, r1 + r2, c1 * c2);
        }
    return out;
}

/// Multiplication by p_n.
template <class K>
PowerSumPoly<K> ps_times_p(int n, const PowerSumPoly<K>& f, int max_weight = -1) {
    PowerSumPoly<K> out;
    for (const auto& [rho, c] : f) {
        if (max_weight >= 0 && rho.weight() + n > max_weight) continue;
        detail::accumulate(out, rho + Partition{n}, c);
    }
    return out;
}

/// Partial derivative with respect to p_n.
template <class K>
PowerSumPoly<K> ps_derivative(int n, const PowerSumPoly<K>& f) {
    PowerSumPoly<K> out;
    for (const auto& [rho, c] : f) {
        int mult = rho.multiplicity(n);
        if (mult == 0) continue;
        std::vector<int> parts = rho.parts();
        parts.erase(std::find(parts.begin(), parts.end(), n));
        detail::accumulate(out, Partition(parts), c * K(Rational(mult)));
    }
    return out;
}

template <class K>
PowerSumPoly<K> ps_homogeneous(const PowerSumPoly<K>& f, int n) {
    PowerSumPoly<K> out;
    for (const auto& [rho, c] : f)
        if (rho.weight() == n) out.emplace(rho, c);
    return out;
}

PowerSumPoly<Rational> to_poly(const SymFunc& f);
/// Result in the p basis.
SymFunc to_symfunc(const PowerSumPoly<Rational>& f);

/// f at an alphabet; coefficients may be series over the alphabet's ring.
template <class K>
Series evaluate_poly(const PowerSumPoly<K>& f, const Alphabet& x) {
    std::map<int, Series> ps;
    Series out = x.ring() ? Series::zero(x.ring()) : Series();
    for (const auto& [rho, c] : f) {
        Series t(c);
        for (int part : rho.parts()) {
            auto it = ps.find(part);
            if (it == ps.end()) it = ps.emplace(part, x.power_sum(part)).first;
            t *= it->second;
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

/// Linear extension of dominance order used by Gram-Schmidt.
enum class DominanceExtension {
    lexicographic,  // increasing lexicographic order of the parts
    conjugate,      // decreasing lexicographic order of the conjugates
};

/// Partitions of n listed from the bottom of the chosen extension upward.
std::vector<Partition> dominance_extension(int n, DominanceExtension ext);

/// Gram-Schmidt orthogonal basis P_lambda (monic, unitriangular over the
/// monomial basis) for <p_rho, p_sigma> = delta z_rho prod xi_{rho_i}, up to
/// weight D, plus everything derived from it. Immutable once built.
template <class K>
class KerovBasis {
public:
    using XiFn = std::function<K(int)>;

    KerovBasis(XiFn xi, int D, DominanceExtension ext = DominanceExtension::lexicographic);

    int max_weight() const { return D_; }
    const K& xi(int n) const { return xi_.at(static_cast<std::size_t>(n - 1)); }
    /// z_rho prod xi_{rho_i}.
    K norm_of(const Partition& rho) const;
    K inner(const PowerSumPoly<K>& f, const PowerSumPoly<K>& g) const;

    const std::vector<Partition>& order(int n) const { return level(n).order; }
    const PowerSumPoly<K>& P(const Partition& lambda) const { return level(lambda.weight()).P.at(lambda); }
    /// P_lambda over the monomial basis.
    const std::map<Partition, K>& P_monomial(const Partition& lambda) const {
        return level(lambda.weight()).Pm.at(lambda);
    }
    const K& b(const Partition& lambda) const { return level(lambda.weight()).b.at(lambda); }
    PowerSumPoly<K> Q(const Partition& lambda) const { return ps_scale(P(lambda), b(lambda)); }

    /// Coefficients c with f = sum c_lambda P_lambda, peeled off from the top
    /// of the order.
    std::map<Partition, K> expand_P(const PowerSumPoly<K>& f) const;
    /// f^lambda_{mu nu}: P_mu P_nu = sum f^lambda P_lambda.
    std::map<Partition, K> structure_constants(const Partition& mu, const Partition& nu) const;
    /// (b_mu b_nu / b_lambda) f^lambda_{mu nu}: Q_mu Q_nu = sum fbar^lambda Q_lambda.
    std::map<Partition, K> dual_structure_constants(const Partition& mu, const Partition& nu) const;
    /// g^perp f, where p_n^perp = n xi_n d/dp_n.
    PowerSumPoly<K> adjoint(const PowerSumPoly<K>& g, const PowerSumPoly<K>& f) const;
    /// Q_{lambda/mu} = sum_nu f^lambda_{mu nu} Q_nu.
    PowerSumPoly<K> skew_Q(const Partition& lambda, const Partition& mu) const;
    /// P_{lambda/mu} = sum_nu fbar^lambda_{mu nu} P_nu.
    PowerSumPoly<K> skew_P(const Partition& lambda, const Partition& mu) const;
    /// Y_lambda^mu with p_lambda = sum Y^mu P_mu.
    std::map<Partition, K> transition_Y(const Partition& lambda) const { return expand_P({{lambda, K(1)}}); }

private:
    struct Level {
        std::vector<Partition> order;
        std::map<Partition, PowerSumPoly<K>> P;
        std::map<Partition, std::map<Partition, K>> Pm;
        std::map<Partition, K> b;
    };
    const Level& level(int n) const;
    void build(int n, DominanceExtension ext);

    int D_;
    std::vector<K> xi_;
    std::vector<Level> levels_;
};

// ------------------------------------------------------------ families

enum class Family { hall_littlewood, jack, macdonald, kappa, explicit_xi };

/// Parameters of a deformation. Kappa requires an integer kappa so that
/// q^kappa stays rational.
struct DeformationParams {
    Family kind = Family::hall_littlewood;
    Rational t, q, alpha{1}, kappa{2};
    std::vector<Rational> xi;

    static DeformationParams hall_littlewood(Rational t);
    static DeformationParams jack(Rational alpha);
    static DeformationParams macdonald(Rational q, Rational t);
    static DeformationParams kappa_family(Rational q, Rational kappa, Rational alpha);
    static DeformationParams explicit_sequence(std::vector<Rational> xi);
    /// xi == 1.
    static DeformationParams schur() { return hall_littlewood(Rational(0)); }

    std::string family_name() const;
    std::string describe() const;
};

/// Throws DomainError on the singular loci.
Rational xi_value(int n, const DeformationParams& params);
Rational deformed_inner(const SymFunc& f, const SymFunc& g, const DeformationParams& params);

using DeformedBasis = KerovBasis<Rational>;
DeformedBasis make_basis(const DeformationParams& params, int D,
                         DominanceExtension ext = DominanceExtension::lexicographic);

/// The weight-n slice: P over the monomial basis and b with Q = b P.
struct DeformedLevel {
    DeformationParams params;
    std::map<Partition, SymFunc> P;
    std::map<Partition, Rational> b;
};
DeformedLevel gram_schmidt_P(int n, const DeformationParams& params,
                             DominanceExtension ext = DominanceExtension::lexicographic);

std::map<Partition, Rational> structure_constants(const Partition& mu, const Partition& nu,
                                                  const DeformationParams& params);
std::map<Partition, Rational> transition_Y(const Partition& lambda, const DeformationParams& params);
/// Q_{lambda/mu}, p basis.
SymFunc deformed_skew(const Partition& lambda, const Partition& mu, const DeformationParams& params);

/// Ring x1..xn truncated at total degree `bound`.
RingPtr variable_ring(int nvars, int bound, const std::string& stem = "x");

/// Q_lambda(x_1..x_n; t) = b_lambda(t) P_lambda, with P_lambda the coset
/// symmetrization; exact polynomial division removes the Vandermonde.
Series hall_littlewood_direct(const Partition& lambda, int nvars, const Rational& t);
/// (1-t)^l sum over all of S_n, read literally.
Series hall_littlewood_symmetrized(const Partition& lambda, int nvars, const Rational& t);
/// Schur Q-function for strict lambda from the index-tuple sum with the
/// u_j and the antisymmetric factor in reversed argument order.
Series q_function_direct(const Partition& lambda, int nvars);

struct DeformedCauchyReport {
    bool ok = true;
    bool pq_ok = true;       // sum P(X)Q(Y) against the power-sum expansion
    bool exp_ok = true;      // exponential kernel against the power-sum expansion
    bool product_checked = false;
    bool product_ok = true;  // closed product form, when the family has one
    int max_degree_checked = 0;
    std::string counterexample;
};

/// The exponential kernel exp(sum_n p_n(X) p_n(Y) / (n xi_n)).
Series deformed_kernel_exp(const DeformationParams& params, const Alphabet& X, const Alphabet& Y, int D);
/// Closed product form in the letters x_i y_j; throws UsageError for the
/// explicit family, which has none.
Series deformed_kernel_product(const DeformationParams& params, const std::vector<Series>& xs,
                               const std::vector<Series>& ys);

DeformedCauchyReport deformed_cauchy_check(const DeformationParams& params, int nx, int ny, int D);

struct ReplicatedCauchyReport {
    bool ok = true;
    bool exp_ok = true;      // against kernel^{tau eta} from the exponential kernel
    bool scaled_ok = true;   // against exp with p_n(X)p_n(Y) scaled by tau eta
    bool product_checked = false;
    bool product_ok = true;  // against (closed product)^{tau eta}
    std::string counterexample;
};

ReplicatedCauchyReport replicated_cauchy_check(const DeformationParams& params, const Rational& tau,
                                               const Rational& eta, int nx, int ny, int D);

struct JackElementaryReport {
    /// Sign s for which sum g_n z^n = prod (1 - z x_j)^{s/alpha} at alpha = 1.
    int resolved_sign = -1;
    bool plus_sign_holds = false;    // s = +1 at the requested alpha
    bool resolved_holds = false;      // symbolic identity with the resolved sign, degree <= D
    bool evaluated_holds = false;     // same identity at nvars concrete variables
    /// P^{(1/alpha)}_(n) divided by (n!/alpha^n) h_n(alpha X) when the two
    /// are proportional; empty entry (0) when they are not.
    std::vector<Rational> normalization_ratio;
    bool ok() const { return resolved_holds && evaluated_holds; }
};

JackElementaryReport jack_elementary_check(const Rational& alpha, int nvars, int D);

/// Max |coefficient difference| over the monomial expansions of weight <= w
/// between Macdonald(q = t^alpha, t = 1 - 1/k) and Jack(alpha).
Rational jack_limit_deviation(int alpha, long k, int max_weight);

// ------------------------------------------------------------ template body

template <class K>
KerovBasis<K>::KerovBasis(XiFn xi, int D, DominanceExtension ext) : D_(D) {
    if (D < 0) throw UsageError("deformed basis: D must be >= 0");
    for (int n = 1; n <= D; ++n) {
        xi_.push_back(xi(n));
        if (!is_invertible(xi_.back())) throw DomainError("deformed basis: xi_" + std::to_string(n) + " is not invertible");
    }
    levels_.resize(static_cast<std::size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) build(n, ext);
}

template <class K>
const typename KerovBasis<K>::Level& KerovBasis<K>::level(int n) const {
    if (n < 0 || n > D_) throw UsageError("deformed basis: weight " + std::to_string(n) + " beyond the built range");
    return levels_[static_cast<std::size_t>(n)];
}

template <class K>
K KerovBasis<K>::norm_of(const Partition& rho) const {
    K v(z_lambda(rho));
    for (int part : rho.parts()) v *= xi(part);
    return v;
}

template <class K>
K KerovBasis<K>::inner(const PowerSumPoly<K>& f, const PowerSumPoly<K>& g) const {
    K out(0);
    for (const auto& [rho, c] : f) {
        auto it = g.find(rho);
        if (it != g.end()) out += c * it->second * norm_of(rho);
    }
    return out;
}

template <class K>
void KerovBasis<K>::build(int n, DominanceExtension ext) {
    Level& lv = levels_[static_cast<std::size_t>(n)];
    const auto parts = enumerate_partitions(n);
    const std::size_t N = parts.size();
    std::map<Partition, std::size_t> idx;
    for (std::size_t i = 0; i < N; ++i) idx[parts[i]] = i;
    const auto& m_to_p = to_power_sums(Basis::m, n);

    std::vector<K> rho_norm;
    for (const auto& rho : parts) rho_norm.push_back(norm_of(rho));
    // Gram matrix of the monomial basis.
    std::vector<std::vector<K>> G(N, std::vector<K>(N, K(0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) {
            K acc(0);
            for (std::size_t r = 0; r < N; ++r)
                if (!m_to_p[i][r].is_zero() && !m_to_p[j][r].is_zero())
                    acc += rho_norm[r] * (m_to_p[i][r] * m_to_p[j][r]);
            G[i][j] = acc;
            G[j][i] = acc;
        }

    lv.order = dominance_extension(n, ext);
    std::vector<std::vector<K>> done;  // coordinates of finished P's, in order
    std::vector<K> done_b;
    for (const auto& lam : lv.order) {
        std::vector<K> c(N, K(0));
        c[idx.at(lam)] = K(1);
        const std::size_t li = idx.at(lam);
        for (std::size_t k = 0; k < done.size(); ++k) {
            K proj(0);
            for (std::size_t j = 0; j < N; ++j)
                if (!is_zero(done[k][j])) proj += G[li][j] * done[k][j];
            if (is_zero(proj)) continue;
            proj *= done_b[k];
            for (std::size_t j = 0; j < N; ++j)
                if (!is_zero(done[k][j])) c[j] -= proj * done[k][j];
        }
        K norm(0);
        for (std::size_t i = 0; i < N; ++i) {
            if (is_zero(c[i])) continue;
            for (std::size_t j = 0; j < N; ++j)
                if (!is_zero(c[j])) norm += c[i] * G[i][j] * c[j];
        }
        if (!is_invertible(norm))
            throw DomainError("deformed basis: degenerate Gram matrix at " + lam.str() +
                              " (parameters on a singular locus)");
        K b = K(1) / norm;
        std::map<Partition, K> pm;
        PowerSumPoly<K> pp;
        for (std::size_t j = 0; j < N; ++j) {
            if (is_zero(c[j])) continue;
            pm.emplace(parts[j], c[j]);
            for (std::size_t r = 0; r < N; ++r)
                if (!m_to_p[j][r].is_zero()) detail::accumulate(pp, parts[r], c[j] * m_to_p[j][r]);
        }
        lv.P.emplace(lam, std::move(pp));
        lv.Pm.emplace(lam, std::move(pm));
        lv.b.emplace(lam, b);
        done.push_back(std::move(c));
        done_b.push_back(b);
    }
}

template <class K>
std::map<Partition, K> KerovBasis<K>::expand_P(const PowerSumPoly<K>& f) const {
    std::map<int, std::map<Partition, K>> by_weight;  // monomial coordinates
    for (const auto& [rho, c] : f) {
        const int n = rho.weight();
        if (n > D_) throw UsageError("expand_P: weight beyond the built range");
        const auto parts = enumerate_partitions(n);
        const auto& p_to_m = from_power_sums(Basis::m, n);
        std::size_t r = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), rho) - parts.begin());
        auto& slot = by_weight[n];
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (!p_to_m[r][j].is_zero()) detail::accumulate(slot, parts[j], c * p_to_m[r][j]);
    }
    std::map<Partition, K> out;
    for (auto& [n, rest] : by_weight) {
        const auto& ord = order(n);
        for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
            auto hit = rest.find(*it);
            if (hit == rest.end()) continue;
            K c = hit->second;
            for (const auto& [mu, v] : P_monomial(*it)) detail::accumulate(rest, mu, -(c * v));
            out.emplace(*it, c);
        }
        if (!rest.empty()) throw DomainError("expand_P: residual after peeling (basis not triangular)");
    }
    return out;
}

template <class K>
std::map<Partition, K> KerovBasis<K>::structure_constants(const Partition& mu, const Partition& nu) const {
    return expand_P(ps_mul(P(mu), P(nu)));
}

template <class K>
std::map<Partition, K> KerovBasis<K>::dual_structure_constants(const Partition& mu, const Partition& nu) const {
    auto f = structure_constants(mu, nu);
    for (auto& [lam, c] : f) c = c * b(mu) * b(nu) / b(lam);
    return f;
}

template <class K>
PowerSumPoly<K> KerovBasis<K>::adjoint(const PowerSumPoly<K>& g, const PowerSumPoly<K>& f) const {
    PowerSumPoly<K> out;
    for (const auto& [rho, c] : g) {
        PowerSumPoly<K> cur = f;
        for (int part : rho.parts()) {
            cur = ps_scale(ps_derivative(part, cur), xi(part) * K(Rational(part)));
            if (cur.empty()) break;
        }
        out = ps_add(std::move(out), cur, c);
    }
    return out;
}

template <class K>
PowerSumPoly<K> KerovBasis<K>::skew_Q(const Partition& lambda, const Partition& mu) const {
    PowerSumPoly<K> out;
    const int n = lambda.weight() - mu.weight();
    if (n < 0) return out;
    for (const auto& nu : enumerate_partitions(n)) {
        auto f = structure_constants(mu, nu);
        auto it = f.find(lambda);
        if (it != f.end()) out = ps_add(std::move(out), Q(nu), it->second);
    }
    return out;
}

template <class K>
PowerSumPoly<K> KerovBasis<K>::skew_P(const Partition& lambda, const Partition& mu) const {
    PowerSumPoly<K> out;
    const int n = lambda.weight() - mu.weight();
    if (n < 0) return out;
    for (const auto& nu : enumerate_partitions(n)) {
        auto f = dual_structure_constants(mu, nu);
        auto it = f.find(lambda);
        if (it != f.end()) out = ps_add(std::move(out), P(nu), it->second);
    }
    return out;
}

}  // namespace repsym
