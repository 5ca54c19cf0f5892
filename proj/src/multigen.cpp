// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/multigen.hpp"

#include <functional>
#include <string>

#include "repsym/bell.hpp"
#include "repsym/error.hpp"

namespace repsym {

namespace {

std::vector<std::string> x_names(int m) {
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

void check_cfg(const MultiGenConfig& cfg) {
    if (cfg.m < 1) throw UsageError("multigen: m must be >= 1");
    if (cfg.D < 0) throw UsageError("multigen: D must be >= 0");
}

RingPtr zq_ring(int D) { return SeriesRing::make({"z", "q"}, D, {0, 1}, {D, SeriesRing::kNoCap}); }

// Every vector of r non-negative integers with sum_l weight(l) k_l <= D.
void for_each_index(int r, int D, const std::function<int(int)>& weight,
                    const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> k(r, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == r) {
            fn(k, used);
            return;
        }
        for (int v = 0; used + v * weight(i + 1) <= D; ++v) {
            k[i] = v;
            rec(i + 1, used + v * weight(i + 1));
        }
        k[i] = 0;
    };
    rec(0, 0);
}

// sum_n c_n z^n (beta(n) - 1) with c_n = 1/n (F) or -(-1)^n/n (G).
Series log_form(const MultiGenConfig& cfg, GenSign sign, const RingPtr& ring) {
    Series acc = Series::zero(ring);
    for (int n = 1; n <= cfg.D; ++n) {
        Series b = beta(cfg.m, n, cfg.D).lift(ring) - Series(1);
        Rational c(1, n);
        if (sign == GenSign::G && n % 2 == 0) c = -c;
        Series zn = cfg.track_z ? Series::power_of(ring, "z", n) : Series::constant(ring, 1);
        acc += zn * b * c;
    }
    return acc;
}

std::vector<Series> bell_args(int j, const MultiGenConfig& cfg, bool exact, bool negate) {
    std::vector<Series> g;
    for (int n = 1; n <= j; ++n) {
        Series b = beta(cfg.m, n, cfg.D);
        if (exact) b -= Series(1);
        Rational c = factorial(n - 1);
        g.push_back(b * (negate ? -c : c));
    }
    return g;
}

}  // namespace

RingPtr x_ring(int m, int D) { return SeriesRing::make(x_names(m), D); }

RingPtr multigen_ring(const MultiGenConfig& cfg) {
    check_cfg(cfg);
    if (!cfg.track_z) return x_ring(cfg.m, cfg.D);
    auto names = x_names(cfg.m);
    names.insert(names.begin(), "z");
    std::vector<int> w(names.size(), 1), caps(names.size(), SeriesRing::kNoCap);
    w[0] = 0;
    caps[0] = cfg.D;
    return SeriesRing::make(names, cfg.D, w, caps);
}

Series beta(int m, int n, int D) {
    if (m < 0) throw UsageError("beta: m must be >= 0");
    if (n < 1) throw UsageError("beta: n must be >= 1");
    auto ring = x_ring(m, D);
    Series out = Series::constant(ring, 1);
    for (int j = 1; j <= m; ++j) {
        Series geo = Series::zero(ring);
        for (int e = 0; e * n <= D; ++e) geo += Series::power_of(ring, "x" + std::to_string(j), e * n);
        out *= geo;
    }
    return out;
}

Series expand_F(const MultiGenConfig& cfg) {
    auto ring = multigen_ring(cfg);
    return log_form(cfg, GenSign::F, ring).exp();
}

Series expand_G(const MultiGenConfig& cfg) {
    auto ring = multigen_ring(cfg);
    return log_form(cfg, GenSign::G, ring).exp();
}

Series expand_product(const MultiGenConfig& cfg, GenSign sign) {
    auto ring = multigen_ring(cfg);
    Series out = Series::constant(ring, 1);
    for_each_index(cfg.m, cfg.D, [](int) { return 1; }, [&](const std::vector<int>& k, int total) {
        if (total == 0) return;
        std::vector<std::uint16_t> e;
        if (cfg.track_z) e.push_back(1);
        for (int v : k) e.push_back(static_cast<std::uint16_t>(v));
        Series t = Series::monomial(ring, Monomial(e));
        if (sign == GenSign::F) out *= (Series(1) - t).inverse();
        else out *= Series(1) + t;
    });
    return out;
}

Series coefficient_P(int j, const MultiGenConfig& cfg) {
    if (j < 1) throw UsageError("coefficient_P: j must be >= 1");
    auto g = bell_args(j, cfg, false, false);
    return bell_recurrence<Series>(j, g) * factorial(j).inverse();
}

Series coefficient_Q(int j, const MultiGenConfig& cfg) {
    if (j < 1) throw UsageError("coefficient_Q: j must be >= 1");
    auto g = bell_args(j, cfg, false, true);
    Rational scale = factorial(j).inverse() * Rational(j % 2 ? -1 : 1);
    return bell_recurrence<Series>(j, g) * scale;
}

Series coefficient_P_exact(int j, const MultiGenConfig& cfg) {
    if (j < 1) throw UsageError("coefficient_P: j must be >= 1");
    auto g = bell_args(j, cfg, true, false);
    return bell_recurrence<Series>(j, g) * factorial(j).inverse();
}

Series coefficient_Q_exact(int j, const MultiGenConfig& cfg) {
    if (j < 1) throw UsageError("coefficient_Q: j must be >= 1");
    auto g = bell_args(j, cfg, true, true);
    Rational scale = factorial(j).inverse() * Rational(j % 2 ? -1 : 1);
    return bell_recurrence<Series>(j, g) * scale;
}

Series z_slice(const Series& s, int j, int m, int D) {
    auto target = x_ring(m, D);
    Series out = Series::zero(target);
    const auto& ring = s.ring();
    if (!ring) return j == 0 ? Series::constant(target, s.constant_term()) : out;
    std::size_t zi = ring->index_of("z");
    for (const auto& [mono, c] : s.terms()) {
        if (mono[zi] != j) continue;
        std::vector<std::uint16_t> e;
        for (std::size_t i = 0; i < mono.size(); ++i)
            if (i != zi) e.push_back(static_cast<std::uint16_t>(mono[i]));
        out += Series::monomial(target, Monomial(e), c);
    }
    return out;
}

Series specialize_to_q(int r, int D, GenSign sign) {
    if (r < 1) throw UsageError("specialize_to_q: r must be >= 1");
    auto ring = zq_ring(D);
    Series q = Series::variable(ring, "q");
    Series acc = Series::zero(ring);
    for (int n = 1; n <= D; ++n) {
        Series b = Series::constant(ring, 1);
        for (int l = 1; l <= r; ++l) b *= (Series(1) - Series::power_of(ring, "q", l * n)).inverse();
        Rational c(1, n);
        if (sign == GenSign::G && n % 2 == 0) c = -c;
        acc += Series::power_of(ring, "z", n) * (b - Series(1)) * c;
    }
    return acc.exp();
}

Series specialize_to_q_product(int r, int D, GenSign sign) {
    if (r < 1) throw UsageError("specialize_to_q: r must be >= 1");
    auto ring = zq_ring(D);
    Series out = Series::constant(ring, 1);
    for_each_index(r, D, [](int l) { return l; }, [&](const std::vector<int>&, int w) {
        if (w == 0) return;
        Series t = Series::monomial(ring, Monomial({1, static_cast<std::uint16_t>(w)}));
        if (sign == GenSign::F) out *= (Series(1) - t).inverse();
        else out *= Series(1) + t;
    });
    return out;
}

Series at_z_one(const Series& s) {
    const auto& ring = s.ring();
    if (!ring) return s;
    auto target = SeriesRing::make({"q"}, ring->bound());
    std::vector<Series> values{Series::constant(target, 1), Series::variable(target, "q")};
    return s.compose(values, target);
}

std::vector<HierarchyFactor> hierarchy_factorize(int r, int D) {
    if (r < 0) throw UsageError("hierarchy_factorize: r must be >= 0");
    auto ring = SeriesRing::make({"q"}, D);
    std::vector<HierarchyFactor> out;
    for_each_index(r, D, [](int) { return 1; }, [&](const std::vector<int>& k, int s) {
        Series f = Series::constant(ring, 1);
        for (int k0 = 0; s + k0 <= D; ++k0) {
            if (s + k0 == 0) continue;
            f *= (Series(1) - Series::power_of(ring, "q", s + k0)).inverse();
        }
        out.push_back({k, f});
    });
    return out;
}

Series hierarchy_direct(int r, int D) {
    if (r < 0) throw UsageError("hierarchy_direct: r must be >= 0");
    auto ring = SeriesRing::make({"q"}, D);
    Series out = Series::constant(ring, 1);
    for (int n = 1; n <= D; ++n)
        out *= (Series(1) - Series::power_of(ring, "q", n)).pow(-binomial(n + r, r).to_long());
    return out;
}

}  // namespace repsym
