// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <functional>

#include "doctest.h"
#include "repsym/error.hpp"
#include "repsym/multigen.hpp"
#include "repsym/partitions.hpp"

using namespace repsym;

namespace {

void for_each_k(int m, int D, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(m, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == m) {
            fn(k);
            return;
        }
        for (int v = 0; used + v <= D; ++v) {
            k[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
}

Rational coeff(const Series& s, int j, const std::vector<int>& k) {
    std::vector<std::uint16_t> e{static_cast<std::uint16_t>(j)};
    for (int v : k) e.push_back(static_cast<std::uint16_t>(v));
    return s.coefficient(Monomial(e));
}

Series geometric(const RingPtr& r, const std::string& v, int step, int D) {
    Series s = Series::zero(r);
    for (int e = 0; e * step <= D; ++e) s += Series::power_of(r, v, e * step);
    return s;
}

}  // namespace

TEST_CASE("beta") {
    CHECK(beta(0, 3, 4) == Series(1));
    auto r1 = x_ring(1, 4);
    CHECK(beta(1, 2, 4) == geometric(r1, "x1", 2, 4));
    auto r2 = x_ring(2, 2);
    CHECK(beta(2, 1, 2) == geometric(r2, "x1", 1, 2) * geometric(r2, "x2", 1, 2));
    CHECK(beta(2, 1, 2).term_count() == 6);
}

TEST_CASE("expand_F and expand_G against brute-force multipartitions") {
    MultiGenConfig c1{1, 6, true};
    CHECK(coeff(expand_F(c1), 2, {4}) == Rational(2));
    MultiGenConfig c2{2, 4, true};
    CHECK(coeff(expand_F(c2), 2, {2, 2}) == Rational(4));

    for (int m = 1; m <= 3; ++m) {
        int D = m == 3 ? 4 : 5;
        MultiGenConfig cfg{m, D, true};
        Series F = expand_F(cfg), G = expand_G(cfg);
        CHECK(F == expand_product(cfg, GenSign::F));
        CHECK(G == expand_product(cfg, GenSign::G));
        for_each_k(m, D, [&](const std::vector<int>& k) {
            MultiIndex mk(k);
            if (mk.is_zero()) return;
            for (int j = 0; j <= 4; ++j) {
                auto plain = enumerate_multipartitions(mk, {.parts = j});
                auto distinct = enumerate_multipartitions(mk, {.parts = j, .distinct = true});
                CHECK(coeff(F, j, k) == Rational(static_cast<long>(plain.size())));
                CHECK(coeff(G, j, k) == Rational(static_cast<long>(distinct.size())));
            }
        });
    }
}

TEST_CASE("z = 1 expansion counts all multipartitions") {
    MultiGenConfig cfg{2, 4, false};
    Series F = expand_F(cfg);
    for_each_k(2, 4, [&](const std::vector<int>& k) {
        MultiIndex mk(k);
        if (mk.is_zero()) return;
        std::vector<std::uint16_t> e(k.begin(), k.end());
        CHECK(F.coefficient(Monomial(e)) == Rational(static_cast<long>(enumerate_multipartitions(mk).size())));
    });
}

TEST_CASE("F(z) G(-z) = 1") {
    for (int m = 1; m <= 2; ++m) {
        MultiGenConfig cfg{m, 5, true};
        Series F = expand_F(cfg), G = expand_G(cfg);
        auto ring = F.ring();
        std::vector<Series> sub;
        for (auto& v : ring->variables())
            sub.push_back(v == "z" ? -Series::variable(ring, "z") : Series::variable(ring, v));
        Series Gm = G.compose(sub, ring);
        CHECK(F * Gm == Series::constant(ring, 1));
        // The literal statement log G(-z) = log F(z) fails; it is log G(-z) = -log F(z).
        CHECK(Gm.log() == -F.log());
        CHECK_FALSE(Gm.log() == F.log());
    }
}

TEST_CASE("coefficient_P and coefficient_Q") {
    MultiGenConfig c13{1, 3, true};
    CHECK(coefficient_P(1, c13) == beta(1, 1, 3));
    auto r = x_ring(1, 3);
    Series expect = Series::constant(r, 1) + Series::power_of(r, "x1", 1) + Series::power_of(r, "x1", 2, 2) +
                    Series::power_of(r, "x1", 3, 2);
    CHECK(coefficient_P(2, c13) == expect);
    Series b1 = beta(1, 1, 3), b2 = beta(1, 2, 3);
    CHECK(coefficient_Q(1, c13) == b1);
    CHECK(coefficient_Q(2, c13) == (b1 * b1 - b2) * Rational(1, 2));

    for (int m = 1; m <= 2; ++m) {
        MultiGenConfig cfg{m, 6, true};
        Series F = expand_F(cfg), G = expand_G(cfg);
        Series cumF = Series::constant(x_ring(m, 6), 1), cumG = Series::constant(x_ring(m, 6), 1);
        for (int j = 1; j <= 5; ++j) {
            Series sF = z_slice(F, j, m, 6), sG = z_slice(G, j, m, 6);
            CHECK(coefficient_P_exact(j, cfg) == sF);
            CHECK(coefficient_Q_exact(j, cfg) == sG);
            // Including the zero index: at most j parts for P; for Q the
            // zero part is either used once or not at all.
            cumF += sF;
            CHECK(coefficient_P(j, cfg) == cumF);
            CHECK(coefficient_Q(j, cfg) == sG + z_slice(G, j - 1, m, 6));
        }
    }
    CHECK_THROWS_AS(coefficient_P(0, c13), UsageError);
}

TEST_CASE("specialize_to_q") {
    for (int r = 1; r <= 3; ++r)
        for (auto sign : {GenSign::F, GenSign::G})
            CHECK(specialize_to_q(r, 7, sign) == specialize_to_q_product(r, 7, sign));
    Series F = specialize_to_q(1, 8, GenSign::F);
    Series F1 = at_z_one(F);
    for (int n = 0; n <= 8; ++n) CHECK(F1.coefficient({n}) == Rational(partition_count(n)));
    for (int n = 1; n <= 8; ++n) CHECK(F.coefficient({1, n}) == Rational(1));
    Series G = specialize_to_q(1, 8, GenSign::G);
    CHECK(G.coefficient({2, 3}) == Rational(1));
    // Multi-index specialization vs brute force at r = 2: x1 = q, x2 = q^2.
    Series F2 = specialize_to_q(2, 6, GenSign::F);
    MultiGenConfig cfg{2, 6, true};
    Series full = expand_F(cfg);
    for (int j = 0; j <= 6; ++j)
        for (int n = 0; n <= 6; ++n) {
            Rational total(0);
            for (const auto& [mono, c] : full.terms())
                if (mono[0] == j && mono[1] + 2 * mono[2] == n) total += c;
            CHECK(F2.coefficient({j, n}) == total);
        }
}

TEST_CASE("hierarchy_factorize") {
    auto f0 = hierarchy_factorize(0, 8);
    REQUIRE(f0.size() == 1);
    for (int n = 0; n <= 8; ++n) CHECK(f0[0].factor.coefficient({n}) == Rational(partition_count(n)));
    for (int r = 0; r <= 3; ++r) {
        auto factors = hierarchy_factorize(r, 6);
        Series prod = Series::constant(factors.front().factor.ring(), 1);
        for (auto& f : factors) prod *= f.factor;
        CHECK(prod == hierarchy_direct(r, 6));
    }
    // The factor with |k| = 2: 1 + q^2 + q^3 + 2q^4 + ...
    for (auto& f : hierarchy_factorize(1, 6)) {
        if (f.k != std::vector<int>{2}) continue;
        auto ring = f.factor.ring();
        Series direct = Series::constant(ring, 1);
        for (int e = 2; e <= 6; ++e) direct *= (Series(1) - Series::power_of(ring, "q", e)).inverse();
        CHECK(f.factor == direct);
        CHECK(f.factor.coefficient({1}) == Rational(0));
        CHECK(f.factor.coefficient({2}) == Rational(1));
        CHECK(f.factor.coefficient({3}) == Rational(1));
    }
}
