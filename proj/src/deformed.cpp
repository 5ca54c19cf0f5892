// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/deformed.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "repsym/qspectral.hpp"

namespace repsym {

PowerSumPoly<Rational> to_poly(const SymFunc& f) {
    SymFunc p = convert(f, Basis::p);
    return PowerSumPoly<Rational>(p.terms().begin(), p.terms().end());
}

SymFunc to_symfunc(const PowerSumPoly<Rational>& f) { return SymFunc(Basis::p, SymFunc::Terms(f.begin(), f.end())); }

std::vector<Partition> dominance_extension(int n, DominanceExtension ext) {
    std::vector<Partition> parts = enumerate_partitions(n);
    if (ext == DominanceExtension::lexicographic) {
        std::reverse(parts.begin(), parts.end());
    } else {
        std::stable_sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) {
            return conjugate(a).parts() > conjugate(b).parts();
        });
    }
    return parts;
}

// ------------------------------------------------------------ parameters

DeformationParams DeformationParams::hall_littlewood(Rational t) {
    DeformationParams p;
    p.kind = Family::hall_littlewood;
    p.t = std::move(t);
    return p;
}

DeformationParams DeformationParams::jack(Rational alpha) {
    DeformationParams p;
    p.kind = Family::jack;
    p.alpha = std::move(alpha);
    return p;
}

DeformationParams DeformationParams::macdonald(Rational q, Rational t) {
    DeformationParams p;
    p.kind = Family::macdonald;
    p.q = std::move(q);
    p.t = std::move(t);
    return p;
}

DeformationParams DeformationParams::kappa_family(Rational q, Rational kappa, Rational alpha) {
    if (!kappa.is_integer()) throw UsageError("kappa family: kappa must be an integer");
    DeformationParams p;
    p.kind = Family::kappa;
    p.q = std::move(q);
    p.kappa = std::move(kappa);
    p.alpha = std::move(alpha);
    return p;
}

DeformationParams DeformationParams::explicit_sequence(std::vector<Rational> xi) {
    DeformationParams p;
    p.kind = Family::explicit_xi;
    p.xi = std::move(xi);
    return p;
}

std::string DeformationParams::family_name() const {
    switch (kind) {
        case Family::hall_littlewood: return "hall-littlewood";
        case Family::jack: return "jack";
        case Family::macdonald: return "macdonald";
        case Family::kappa: return "kappa";
        case Family::explicit_xi: return "explicit";
    }
    return "?";
}

std::string DeformationParams::describe() const {
    std::ostringstream os;
    os << family_name() << "(";
    switch (kind) {
        case Family::hall_littlewood: os << "t=" << t; break;
        case Family::jack: os << "alpha=" << alpha; break;
        case Family::macdonald: os << "q=" << q << ",t=" << t; break;
        case Family::kappa: os << "q=" << q << ",kappa=" << kappa << ",alpha=" << alpha; break;
        case Family::explicit_xi:
            for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i];
            break;
    }
    os << ")";
    return os.str();
}

Rational xi_value(int n, const DeformationParams& p) {
    if (n < 1) throw UsageError("xi_value: n must be >= 1");
    auto singular = [&](const std::string& why) {
        return DomainError("xi_" + std::to_string(n) + " singular for " + p.describe() + ": " + why);
    };
    switch (p.kind) {
        case Family::hall_littlewood: {
            Rational d = Rational(1) - p.t.pow(n);
            if (d.is_zero()) throw singular("t^n = 1");
            return d.inverse();
        }
        case Family::jack:
            if (p.alpha.is_zero()) throw singular("alpha = 0");
            return p.alpha;
        case Family::macdonald: {
            Rational num = Rational(1) - p.q.pow(n), den = Rational(1) - p.t.pow(n);
            if (den.is_zero()) throw singular("t^n = 1");
            if (num.is_zero()) throw singular("q^n = 1");
            return num / den;
        }
        case Family::kappa: {
            if (p.q.is_zero()) throw singular("q = 0");
            if (p.alpha.is_zero()) throw singular("alpha = 0");
            const long k = p.kappa.to_long();
            Rational num = p.q.pow(k * n) - p.q.pow(-k * n);
            Rational den = p.q.pow(2L * n) - p.q.pow(-2L * n);
            if (den.is_zero()) throw singular("q^{2n} = q^{-2n}");
            if (num.is_zero()) throw singular("q^{kappa n} = q^{-kappa n}");
            return p.alpha * num / den;
        }
        case Family::explicit_xi:
            if (static_cast<std::size_t>(n) > p.xi.size())
                throw UsageError("xi_value: explicit sequence has no xi_" + std::to_string(n));
            if (p.xi[static_cast<std::size_t>(n - 1)].is_zero()) throw singular("xi_n = 0");
            return p.xi[static_cast<std::size_t>(n - 1)];
    }
    throw UsageError("xi_value: unknown family");
}

Rational deformed_inner(const SymFunc& f, const SymFunc& g, const DeformationParams& params) {
    SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
    Rational out(0);
    for (const auto& [rho, c] : a.terms()) {
        Rational d = b.coefficient(rho);
        if (d.is_zero()) continue;
        Rational w = z_lambda(rho);
        for (int part : rho.parts()) w *= xi_value(part, params);
        out += c * d * w;
    }
    return out;
}

DeformedBasis make_basis(const DeformationParams& params, int D, DominanceExtension ext) {
    return DeformedBasis([params](int n) { return xi_value(n, params); }, D, ext);
}

DeformedLevel gram_schmidt_P(int n, const DeformationParams& params, DominanceExtension ext) {
    DeformedBasis basis = make_basis(params, n, ext);
    DeformedLevel out{params, {}, {}};
    for (const auto& lam : basis.order(n)) {
        const auto& pm = basis.P_monomial(lam);
        out.P.emplace(lam, SymFunc(Basis::m, SymFunc::Terms(pm.begin(), pm.end())));
        out.b.emplace(lam, basis.b(lam));
    }
    return out;
}

std::map<Partition, Rational> structure_constants(const Partition& mu, const Partition& nu,
                                                  const DeformationParams& params) {
    return make_basis(params, mu.weight() + nu.weight()).structure_constants(mu, nu);
}

std::map<Partition, Rational> transition_Y(const Partition& lambda, const DeformationParams& params) {
    return make_basis(params, lambda.weight()).transition_Y(lambda);
}

SymFunc deformed_skew(const Partition& lambda, const Partition& mu, const DeformationParams& params) {
    return to_symfunc(make_basis(params, lambda.weight()).skew_Q(lambda, mu));
}

// ------------------------------------------------------------ direct evaluators

RingPtr variable_ring(int nvars, int bound, const std::string& stem) {
    std::vector<std::string> names;
    for (int i = 1; i <= nvars; ++i) names.push_back(stem + std::to_string(i));
    return SeriesRing::make(names, bound);
}

namespace {

// w(f): variable i is renamed to perm[i].
Series permute(const Series& f, const std::vector<int>& perm) {
    Series out = Series::zero(f.ring());
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint16_t> e(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) e[static_cast<std::size_t>(perm[i])] = static_cast<std::uint16_t>(m[i]);
        out += Series::monomial(f.ring(), Monomial(e), c);
    }
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

// (1/Delta) sum_w sign(w) w(f), divided exactly.
Series antisymmetrize_over_vandermonde(const Series& f, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Series acc = Series::zero(f.ring());
    do {
        Series w = permute(f, perm);
        acc += permutation_sign(perm) > 0 ? w : -w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc = divide_by_linear(acc, static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(1));
    return acc;
}

Series monomial_power(const RingPtr& ring, const Partition& lambda, int n) {
    std::vector<std::uint16_t> e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(lambda[static_cast<std::size_t>(i)]);
    return Series::monomial(ring, Monomial(e));
}

Series linear(const RingPtr& ring, int i, int j, const Rational& c) {
    return Series::variable(ring, ring->variables()[static_cast<std::size_t>(i)]) -
           Series::variable(ring, ring->variables()[static_cast<std::size_t>(j)]) * c;
}

// phi_m(t) = (1-t)(1-t^2)...(1-t^m).
Rational phi(int m, const Rational& t) {
    Rational out(1);
    for (int j = 1; j <= m; ++j) out *= Rational(1) - t.pow(j);
    return out;
}

}  // namespace

Series hall_littlewood_direct(const Partition& lambda, int nvars, const Rational& t) {
    if (nvars < 1) throw UsageError("hall_littlewood_direct: nvars must be >= 1");
    const int n = nvars;
    RingPtr out_ring = variable_ring(n, lambda.weight());
    if (lambda.length() > n) return Series::zero(out_ring);
    RingPtr ring = variable_ring(n, lambda.weight() + n * (n - 1) / 2);
    Series f = monomial_power(ring, lambda, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (lambda[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(j)]) f *= linear(ring, i, j, t);
            else f *= linear(ring, i, j, Rational(1));
        }
    Series P = antisymmetrize_over_vandermonde(f, n);
    Rational stab(1), b(1);
    for (int part = 0; part <= lambda[0]; ++part) {
        int m = part == 0 ? n - lambda.length() : lambda.multiplicity(part);
        stab *= factorial(m);
        if (part > 0) b *= phi(m, t);
    }
    return (P * (b / stab)).lift(out_ring);
}

Series hall_littlewood_symmetrized(const Partition& lambda, int nvars, const Rational& t) {
    if (nvars < 1) throw UsageError("hall_littlewood_symmetrized: nvars must be >= 1");
    const int n = nvars;
    RingPtr out_ring = variable_ring(n, lambda.weight());
    if (lambda.length() > n) return Series::zero(out_ring);
    RingPtr ring = variable_ring(n, lambda.weight() + n * (n - 1) / 2);
    Series f = monomial_power(ring, lambda, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) f *= linear(ring, i, j, t);
    Series S = antisymmetrize_over_vandermonde(f, n);
    return (S * (Rational(1) - t).pow(lambda.length())).lift(out_ring);
}

Series q_function_direct(const Partition& lambda, int nvars) {
    if (!lambda.is_strict()) throw UsageError("q_function_direct: lambda must have distinct parts");
    if (nvars < 1) throw UsageError("q_function_direct: nvars must be >= 1");
    const int n = nvars, p = lambda.length();
    RingPtr out_ring = variable_ring(n, lambda.weight());
    if (p > n) return Series::zero(out_ring);
    RingPtr ring = variable_ring(n, lambda.weight() + 3 * n * (n - 1) / 2);
    // Exponents of (x_i - x_j) and (x_i + x_j), i < j, in one term.
    using Table = std::vector<std::vector<int>>;
    Series acc = Series::zero(ring);
    std::vector<int> js(static_cast<std::size_t>(p), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k < p) {
            for (int j = 0; j < n; ++j) {
                if (std::find(js.begin(), js.begin() + k, j) != js.begin() + k) continue;
                js[static_cast<std::size_t>(k)] = j;
                rec(k + 1);
            }
            return;
        }
        Table minus(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        Table plus = minus;
        int sign = 1;
        auto diff = [&](int a, int b, int e) {  // (x_a - x_b)^e
            if (a < b) minus[a][b] += e;
            else {
                minus[b][a] += e;
                if (e % 2) sign = -sign;
            }
        };
        auto sum = [&](int a, int b, int e) { plus[std::min(a, b)][std::max(a, b)] += e; };
        for (int jk : js)
            for (int i = 0; i < n; ++i) {
                if (i == jk) continue;
                sum(jk, i, 1);
                diff(jk, i, -1);
            }
        // A(y_1..y_p) with y_a = x_{j_{p+1-a}}.
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b) {
                int ya = js[static_cast<std::size_t>(p - 1 - a)], yb = js[static_cast<std::size_t>(p - 1 - b)];
                diff(ya, yb, 1);
                sum(ya, yb, -1);
            }
        std::vector<std::uint16_t> e(static_cast<std::size_t>(n), 0);
        for (int k2 = 0; k2 < p; ++k2) e[static_cast<std::size_t>(js[static_cast<std::size_t>(k2)])] += static_cast<std::uint16_t>(lambda[static_cast<std::size_t>(k2)]);
        Series term = Series::monomial(ring, Monomial(e), Rational(sign));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int em = minus[i][j] + 2, ep = plus[i][j] + 1;  // times Delta^2 S
                if (em < 0 || ep < 0) throw DomainError("q_function_direct: denominator not cleared");
                for (int r = 0; r < em; ++r) term *= linear(ring, i, j, Rational(1));
                for (int r = 0; r < ep; ++r) term *= linear(ring, i, j, Rational(-1));
            }
        acc += term;
    };
    rec(0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = divide_by_linear(acc, static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(1));
            acc = divide_by_linear(acc, static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(1));
            acc = divide_by_linear(acc, static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(-1));
        }
    return (acc * Rational(2).pow(p)).lift(out_ring);
}

// ------------------------------------------------------------ Cauchy identities

Series deformed_kernel_exp(const DeformationParams& params, const Alphabet& X, const Alphabet& Y, int D) {
    Series arg = Series::zero(X.ring());
    for (int n = 1; n <= D; ++n)
        arg += X.power_sum(n) * Y.power_sum(n) * (Rational(n) * xi_value(n, params)).inverse();
    return arg.exp();
}

Series deformed_kernel_product(const DeformationParams& params, const std::vector<Series>& xs,
                               const std::vector<Series>& ys) {
    if (xs.empty() || ys.empty()) return Series(1);
    Series out = Series::constant(xs.front().ring(), 1);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Series a = x * y;
            switch (params.kind) {
                case Family::hall_littlewood:
                    out *= (Series(1) - a * params.t) * (Series(1) - a).inverse();
                    break;
                case Family::jack:
                    out *= (Series(1) - a).pow(-params.alpha.inverse());
                    break;
                case Family::macdonald:
                    out *= pochhammer_inf_euler(a * params.t, params.q) * pochhammer_inf_euler(a, params.q).inverse();
                    break;
                case Family::kappa: {
                    const long k = params.kappa.to_long();
                    Rational Q = params.q.pow(2 * k);
                    Series ratio = pochhammer_inf_euler(a * params.q.pow(k + 2), Q) *
                                   pochhammer_inf_euler(a * params.q.pow(k - 2), Q).inverse();
                    out *= ratio.pow(params.alpha.inverse());
                    break;
                }
                case Family::explicit_xi:
                    throw UsageError("deformed_kernel_product: the explicit family has no product form");
            }
        }
    return out;
}

namespace {

struct CauchySetup {
    RingPtr ring;
    std::vector<Series> xs, ys;
    Alphabet X, Y;
};

CauchySetup cauchy_setup(int nx, int ny, int D) {
    if (nx < 0 || ny < 0 || D < 0) throw UsageError("cauchy check: counts must be non-negative");
    std::vector<std::string> xn, yn, all;
    for (int i = 1; i <= nx; ++i) xn.push_back("x" + std::to_string(i));
    for (int j = 1; j <= ny; ++j) yn.push_back("y" + std::to_string(j));
    all = xn;
    all.insert(all.end(), yn.begin(), yn.end());
    CauchySetup s;
    s.ring = SeriesRing::make(all, 2 * D);
    for (const auto& v : xn) s.xs.push_back(Series::variable(s.ring, v));
    for (const auto& v : yn) s.ys.push_back(Series::variable(s.ring, v));
    s.X = Alphabet::of_variables(s.ring, xn);
    s.Y = Alphabet::of_variables(s.ring, yn);
    return s;
}

bool has_product_form(const DeformationParams& p) { return p.kind != Family::explicit_xi; }

}  // namespace

DeformedCauchyReport deformed_cauchy_check(const DeformationParams& params, int nx, int ny, int D) {
    CauchySetup s = cauchy_setup(nx, ny, D);
    DeformedBasis basis = make_basis(params, D);
    Series zsum = Series::zero(s.ring), pq = Series::zero(s.ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            Series px = evaluate_poly<Rational>({{lam, Rational(1)}}, s.X);
            Series py = evaluate_poly<Rational>({{lam, Rational(1)}}, s.Y);
            zsum += px * py * basis.norm_of(lam).inverse();
            pq += evaluate_poly(basis.P(lam), s.X) * evaluate_poly(basis.Q(lam), s.Y);
        }
    Series ex = deformed_kernel_exp(params, s.X, s.Y, D);
    DeformedCauchyReport rep;
    rep.max_degree_checked = D;
    rep.pq_ok = pq == zsum;
    rep.exp_ok = ex == zsum;
    if (has_product_form(params)) {
        rep.product_checked = true;
        Series prod = deformed_kernel_product(params, s.xs, s.ys);
        rep.product_ok = prod == zsum;
        if (!rep.product_ok && rep.counterexample.empty())
            rep.counterexample = "product - power-sum expansion = " + (prod - zsum).str();
    }
    if (!rep.pq_ok) rep.counterexample = "sum P Q - power-sum expansion = " + (pq - zsum).str();
    else if (!rep.exp_ok) rep.counterexample = "exp kernel - power-sum expansion = " + (ex - zsum).str();
    rep.ok = rep.pq_ok && rep.exp_ok && rep.product_ok;
    return rep;
}

ReplicatedCauchyReport replicated_cauchy_check(const DeformationParams& params, const Rational& tau,
                                               const Rational& eta, int nx, int ny, int D) {
    CauchySetup s = cauchy_setup(nx, ny, D);
    DeformedBasis basis = make_basis(params, D);
    Alphabet Xt = s.X.replicated(tau), Ye = s.Y.replicated(eta);
    Series lhs = Series::zero(s.ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& lam : enumerate_partitions(n))
            lhs += evaluate_poly(basis.P(lam), Xt) * evaluate_poly(basis.Q(lam), Ye);
    const Rational te = tau * eta;
    Series powered = deformed_kernel_exp(params, s.X, s.Y, D).pow(te);
    Series scaled = deformed_kernel_exp(params, Xt, Ye, D);
    ReplicatedCauchyReport rep;
    rep.exp_ok = lhs == powered;
    rep.scaled_ok = lhs == scaled;
    if (has_product_form(params)) {
        rep.product_checked = true;
        Series prod = deformed_kernel_product(params, s.xs, s.ys).pow(te);
        rep.product_ok = lhs == prod;
        if (!rep.product_ok) rep.counterexample = "lhs - product^(tau eta) = " + (lhs - prod).str();
    }
    if (!rep.exp_ok) rep.counterexample = "lhs - kernel^(tau eta) = " + (lhs - powered).str();
    else if (!rep.scaled_ok) rep.counterexample = "lhs - scaled kernel = " + (lhs - scaled).str();
    rep.ok = rep.exp_ok && rep.scaled_ok && rep.product_ok;
    return rep;
}

// ------------------------------------------------------------ Jack checks

namespace {

// Coefficient of z^n in prod_j (1 - z x_j)^c over the power sums.
PowerSumPoly<Rational> elementary_generator(int n, const Rational& c) {
    PowerSumPoly<Rational> out;
    for (const auto& rho : enumerate_partitions(n)) out.emplace(rho, (-c).pow(rho.length()) / z_lambda(rho));
    return out;
}

bool generator_matches(const DeformedBasis& basis, const Rational& c, int D) {
    for (int n = 1; n <= D; ++n)
        if (elementary_generator(n, c) != basis.Q(Partition{n})) return false;
    return true;
}

}  // namespace

JackElementaryReport jack_elementary_check(const Rational& alpha, int nvars, int D) {
    if (alpha.is_zero()) throw DomainError("jack_elementary_check: alpha must be non-zero");
    if (nvars < 1 || D < 0) throw UsageError("jack_elementary_check: need nvars >= 1 and D >= 0");
    JackElementaryReport rep;
    const int probe = std::max(D, 2);
    DeformedBasis schur = make_basis(DeformationParams::jack(Rational(1)), probe);
    const bool minus = generator_matches(schur, Rational(-1), probe);
    const bool plus = generator_matches(schur, Rational(1), probe);
    rep.resolved_sign = minus && !plus ? -1 : (plus && !minus ? 1 : 0);

    DeformedBasis jack = make_basis(DeformationParams::jack(alpha), D);
    rep.plus_sign_holds = generator_matches(jack, alpha.inverse(), D);
    if (rep.resolved_sign == 0) return rep;
    const Rational c = Rational(rep.resolved_sign) / alpha;
    rep.resolved_holds = generator_matches(jack, c, D);

    std::vector<std::string> names{"z"};
    std::vector<int> weights{1}, caps{SeriesRing::kNoCap};
    for (int i = 1; i <= nvars; ++i) {
        names.push_back("x" + std::to_string(i));
        weights.push_back(0);
        caps.push_back(D);
    }
    RingPtr ring = SeriesRing::make(names, D, weights, caps);
    Series z = Series::variable(ring, "z");
    std::vector<std::string> xn(names.begin() + 1, names.end());
    Alphabet X = Alphabet::of_variables(ring, xn);
    Series product = Series::constant(ring, 1);
    for (const auto& x : xn) product *= (Series(1) - z * Series::variable(ring, x)).pow(c);
    Series sum = Series::constant(ring, 1);
    for (int n = 1; n <= D; ++n) sum += z.pow(static_cast<long>(n)) * evaluate_poly(jack.Q(Partition{n}), X);
    rep.evaluated_holds = product == sum;

    DeformedBasis inverse = make_basis(DeformationParams::jack(alpha.inverse()), D);
    for (int n = 1; n <= D; ++n) {
        PowerSumPoly<Rational> rhs = to_poly(replicate(SymFunc::element(Basis::h, Partition{n}), alpha));
        rhs = ps_scale(rhs, factorial(n) / alpha.pow(n));
        const auto& P = inverse.P(Partition{n});
        Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        Rational ratio = P.at(ones) / rhs.at(ones);
        rep.normalization_ratio.push_back(ps_scale(rhs, ratio) == P ? ratio : Rational(0));
    }
    return rep;
}

Rational jack_limit_deviation(int alpha, long k, int max_weight) {
    if (k < 2) throw UsageError("jack_limit_deviation: k must be >= 2");
    Rational t = Rational(1) - Rational(1, k);
    DeformedBasis mac = make_basis(DeformationParams::macdonald(t.pow(alpha), t), max_weight);
    DeformedBasis jack = make_basis(DeformationParams::jack(Rational(alpha)), max_weight);
    Rational worst(0);
    for (int n = 1; n <= max_weight; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            const auto& a = mac.P_monomial(lam);
            const auto& b = jack.P_monomial(lam);
            for (const auto& mu : enumerate_partitions(n)) {
                auto ia = a.find(mu);
                auto ib = b.find(mu);
                Rational d = (ia == a.end() ? Rational(0) : ia->second) - (ib == b.end() ? Rational(0) : ib->second);
                worst = std::max(worst, d.abs());
            }
        }
    return worst;
}

}  // namespace repsym
