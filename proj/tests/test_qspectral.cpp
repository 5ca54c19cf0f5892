// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "repsym/error.hpp"
#include "repsym/partitions.hpp"
#include "repsym/qspectral.hpp"

using namespace repsym;

namespace {

std::vector<Rational> constant_seq(long v, int n) { return std::vector<Rational>(n, Rational(v)); }

// prod_{n<=D} (1 - q^n)^{-a_n} by repeated multiplication of truncated series.
std::vector<Rational> direct_product(const std::vector<Rational>& a, int D) {
    auto r = SeriesRing::make({"q"}, D);
    Series out = Series::constant(r, 1);
    for (int n = 1; n <= D; ++n) out *= (Series(1) - Series::power_of(r, "q", n)).pow(-a[n - 1].to_long());
    std::vector<Rational> B;
    for (int n = 0; n <= D; ++n) B.push_back(out.coefficient({n}));
    return B;
}

}  // namespace

TEST_CASE("symbolic pochhammer") {
    auto r = SeriesRing::make({"q"}, 7);
    Series q = Series::variable(r, "q");
    CHECK(pochhammer(q, q, 0) == Series(1));
    CHECK(pochhammer(q, q, 2) == (Series(1) - q) * (Series(1) - q * q));
    Series inf = pochhammer_inf(q, q);
    Series expect = Series(1) - q - q.pow(2l) + q.pow(5l) + q.pow(7l);
    CHECK(inf == expect);
    auto e = euler_expand(constant_seq(-1, 7), 7);
    for (int n = 0; n <= 7; ++n) CHECK(inf.coefficient({n}) == e[n]);
}

TEST_CASE("Euler expansion of (b; Q)_inf with rational Q") {
    auto r = SeriesRing::make({"b"}, 6);
    Series b = Series::variable(r, "b");
    for (Rational Q : {Rational(1, 2), Rational(-1, 3), Rational(2, 7)}) {
        Series f = pochhammer_inf(b, Series(Q));
        // Functional equation f(b) = (1 - b) f(Q b).
        std::vector<Series> sub{b * Q};
        CHECK(f == (Series(1) - b) * f.compose(sub, r));
        CHECK(f.coefficient({1}) == -(Rational(1) - Q).inverse());
    }
    CHECK_THROWS_AS(pochhammer_inf(b, Series(Rational(1))), DomainError);
}

TEST_CASE("euler_expand") {
    auto p = euler_expand(constant_seq(1, 30), 30);
    for (int n = 0; n <= 30; ++n) CHECK(p[n] == Rational(partition_count(n)));
    std::vector<Rational> unit(10, Rational(0));
    unit[0] = Rational(1);
    for (auto& x : euler_expand(unit, 10)) CHECK(x == Rational(1));
    auto pent = euler_expand(constant_seq(-1, 12), 12);
    CHECK(pent == direct_product(constant_seq(-1, 12), 12));
    std::vector<long> expect{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (int n = 0; n <= 12; ++n) CHECK(pent[n] == Rational(expect[n]));
}

TEST_CASE("euler_invert") {
    auto p = euler_expand(constant_seq(1, 20), 20);
    for (auto& a : euler_invert(p, 20)) CHECK(a == Rational(1));
    std::vector<Rational> delta(11, Rational(0));
    delta[0] = Rational(1);
    for (auto& a : euler_invert(delta, 10)) CHECK(a.is_zero());
    auto sq = direct_product(constant_seq(2, 15), 15);
    for (auto& a : euler_invert(sq, 15)) CHECK(a == Rational(2));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> a;
        for (int i = 0; i < 30; ++i) a.emplace_back(dist(rng));
        auto B = euler_expand(a, 30);
        CHECK(euler_invert(B, 30) == a);
        if (trial < 3) CHECK(euler_expand(a, 14) == direct_product(a, 14));
    }
    std::vector<Rational> bad{Rational(2), Rational(1)};
    CHECK_THROWS_AS(euler_invert(bad, 1), UsageError);
}

TEST_CASE("ruelle products") {
    SpectralParams p{1.0, {0, 0}, 1, {0, 1}};
    auto r = ruelle_product(p, 1e-12);
    // Oracle: the first 40 factors multiplied directly.
    double oracle = 1.0, oracle_plus = 1.0;
    for (int n = 1; n <= 40; ++n) {
        oracle *= 1.0 - std::exp(-2 * std::numbers::pi * n);
        oracle_plus *= 1.0 + std::exp(-2 * std::numbers::pi * n);
    }
    CHECK(std::abs(r.value.real() - oracle) < 1e-12);
    CHECK(r.value.real() == doctest::Approx(0.998129).epsilon(1e-6));
    CHECK(std::abs(r.value.imag()) < 1e-15);
    CHECK(std::abs(r.s - Complex(1, 0)) < 1e-15);
    auto plus = ruelle_plus_product(p, 1e-12);
    CHECK(std::abs(plus.value.real() - oracle_plus) < 1e-12);
    CHECK(plus.value.real() == doctest::Approx(1.001871).epsilon(1e-6));
    CHECK(std::abs(plus.s - Complex(1, 0.5)) < 1e-15);

    SpectralParams far = p;
    far.ell = 20;
    CHECK(std::abs(ruelle_product(far).value - 1.0) < 1e-12);

    Complex theta(0.1, 0.5);
    Complex q = std::exp(Complex(0, 2 * std::numbers::pi) * theta);
    for (int ell = 1; ell <= 4; ++ell) {
        SpectralParams a{1.5, {0.2, 0.1}, ell, theta}, b = a;
        b.ell = ell + 1;
        Complex w = std::pow(q, 1.5 * ell + Complex(0.2, 0.1));
        CHECK(std::abs(ruelle_product(b, 1e-13).value - ruelle_product(a, 1e-13).value / (1.0 - w)) < 1e-11);
    }
    // prod (1 + q^n) = prod (1 - q^{2n}) / prod (1 - q^n).
    SpectralParams one{1.0, {0, 0}, 1, theta}, two{2.0, {0, 0}, 1, theta};
    Complex lhs = ruelle_plus_product(one, 1e-13).value;
    Complex rhs = ruelle_product(two, 1e-13).value / ruelle_product(one, 1e-13).value;
    CHECK(std::abs(lhs - rhs) < 1e-11);

    CHECK_THROWS_AS(ruelle_product({1.0, {0, 0}, 1, {0.3, 0}}), DomainError);
    CHECK_THROWS_AS(ruelle_product({-1.0, {0, 0}, 1, {0, 1}}), DomainError);
}

TEST_CASE("numeric ruelle product agrees with the symbolic (q;q)_inf") {
    auto r = SeriesRing::make({"q"}, 30);
    Series q = Series::variable(r, "q");
    Series sym = pochhammer_inf(q, q);
    Complex qn = std::exp(Complex(0, 2 * std::numbers::pi) * Complex(0, 1));
    std::vector<Complex> at{qn};
    Complex val = sym.evaluate(std::span<const Complex>(at));
    auto num = ruelle_product({1.0, {0, 0}, 1, {0, 1}}, 1e-12);
    CHECK(std::abs(val - num.value) < 1e-11);
    CHECK(std::abs(pochhammer_inf(qn, qn) - num.value) < 1e-11);
    CHECK_THROWS_AS(pochhammer_inf(Complex(0.5, 0), Complex(1.0, 0)), DomainError);
}

TEST_CASE("check_spectral_identities") {
    auto a = check_spectral_identities(1, 1, {0, 1}, {0.3, 0}, 1e-9);
    CHECK(a.ok);
    CHECK(a.max_deviation < 1e-9);
    auto b = check_spectral_identities(2, 3, {0.1, 0.5}, {0.2, 0.1}, 1e-8);
    CHECK(b.ok);
    CHECK(b.entries.size() == 3);
    auto c = check_spectral_identities(3, 5, {0.3, 0.7}, {-0.4, 0.2}, 1e-8);
    CHECK(c.ok);
    auto d = check_spectral_identities(3, 2, {0.0, 8.0}, {0.1, 0}, 1e-9);
    CHECK(d.ok);
    CHECK(std::abs(d.entries[0].finite - 1.0) < 1e-15);
}
