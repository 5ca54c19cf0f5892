// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "repsym/error.hpp"
#include "repsym/series.hpp"

using namespace repsym;

namespace {

Series poly(const RingPtr& r, std::initializer_list<Rational> coeffs) {
    Series s = Series::zero(r);
    int k = 0;
    for (const auto& c : coeffs) s += Series::power_of(r, "q", k++, c);
    return s;
}

Series random_series(const RingPtr& r, std::mt19937& rng, bool zero_constant) {
    std::uniform_int_distribution<int> coef(-4, 4), den(1, 3), deg(0, 2);
    Series s = Series::zero(r);
    for (int i = 0; i < 6; ++i) {
        std::vector<std::uint16_t> e(r->size());
        for (auto& x : e) x = static_cast<std::uint16_t>(deg(rng));
        Monomial m(e);
        if (zero_constant && m.degree() == 0) continue;
        s += Series::monomial(r, m, Rational(coef(rng), den(rng)));
    }
    return s;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational::parse("-12/18") == Rational(-2, 3));
    CHECK_THROWS_AS(Rational::parse("1/x"), UsageError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(factorial(5) == Rational(120));
}

TEST_CASE("complex parsing") {
    CHECK(parse_complex("0+1i") == Complex(0, 1));
    CHECK(parse_complex("0.1+0.5i") == Complex(0.1, 0.5));
    CHECK(parse_complex("1/4-1/2i") == Complex(0.25, -0.5));
    CHECK(parse_complex("-i") == Complex(0, -1));
    CHECK(parse_complex("3") == Complex(3, 0));
    CHECK(parse_complex("1e-3+2e-1i") == Complex(1e-3, 0.2));
    CHECK_THROWS_AS(parse_complex("1+xi"), UsageError);
}

TEST_CASE("series_mul") {
    auto r2 = SeriesRing::make({"q"}, 2);
    CHECK(poly(r2, {1, 1}) * poly(r2, {1, -1}) == poly(r2, {1, 0, -1}));
    auto r4 = SeriesRing::make({"q"}, 4);
    CHECK(poly(r4, {1, 1, 1, 1, 1}) * poly(r4, {1, -1}) == poly(r4, {1}));
    Series a = poly(r4, {2, 0, 3});
    CHECK(a * Series(1) == a);
    auto other = SeriesRing::make({"q"}, 3);
    CHECK_THROWS_AS(a * poly(other, {1, 1}), UsageError);
    auto renamed = SeriesRing::make({"z"}, 4);
    CHECK_THROWS_AS(a + Series::variable(renamed, "z"), UsageError);
}

TEST_CASE("series_exp") {
    auto r = SeriesRing::make({"q"}, 3);
    CHECK(Series::zero(r).exp() == Series::constant(r, 1));
    CHECK(Series::variable(r, "q").exp() == poly(r, {1, 1, Rational(1, 2), Rational(1, 6)}));
    CHECK_THROWS_AS(poly(r, {1, 1}).exp(), UsageError);

    // exp(-log(1-q)) is the partition generating function only for the
    // product over all n; here a single factor gives the geometric series.
    auto r4 = SeriesRing::make({"q"}, 4);
    Series lg = Series::zero(r4);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; n * k <= 4; ++k) lg += Series::power_of(r4, "q", n * k, Rational(1, k));
    CHECK(lg.exp() == poly(r4, {1, 1, 2, 3, 5}));
}

TEST_CASE("series_log") {
    auto r = SeriesRing::make({"q"}, 3);
    CHECK(Series::constant(r, 1).log().is_zero());
    CHECK(poly(r, {1, -1}).log() == poly(r, {0, -1, Rational(-1, 2), Rational(-1, 3)}));
    Series f = (poly(r, {1, -1}) * poly(r, {1, 0, -1})).inverse();
    // Oracle: sum of the two Mercator expansions, q^n/n plus q^{2n}/n.
    Series mercator = Series::zero(r);
    for (int n = 1; n <= 3; ++n) mercator += Series::power_of(r, "q", n, Rational(1, n));
    mercator += Series::power_of(r, "q", 2, Rational(1));
    CHECK(f.log() == mercator);
    CHECK(f.log().coefficient({3}) == Rational(1, 3));
    CHECK_THROWS_AS(poly(r, {2, 1}).log(), UsageError);
}

TEST_CASE("ring axioms and exp/log inverse on random multivariate series") {
    std::mt19937 rng(7);
    for (int D = 0; D <= 6; ++D) {
        auto r = SeriesRing::make({"x", "y", "z"}, D);
        for (int trial = 0; trial < 5; ++trial) {
            Series a = random_series(r, rng, false), b = random_series(r, rng, false),
                   c = random_series(r, rng, false);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            Series n = random_series(r, rng, true);
            CHECK(n.exp().log() == n);
            Series u = n + Series(1);
            CHECK(u.log().exp() == u);
            CHECK(u * u.inverse() == Series::constant(r, 1));
        }
    }
}

TEST_CASE("weighted rings and caps") {
    auto r = SeriesRing::make({"q", "x"}, 3, {1, 0}, {SeriesRing::kNoCap, 2});
    Series x = Series::variable(r, "x"), q = Series::variable(r, "q");
    CHECK(x.pow(2l).term_count() == 1);
    CHECK(x.pow(3l).is_zero());
    CHECK((q * x).pow(3l) == Series::monomial(r, Monomial({3, 3}), 0));
    CHECK(q.pow(3l).term_count() == 1);
    CHECK(q.pow(4l).is_zero());
    // (1 - q x)^{-1} keeps x^k q^k for k <= 2.
    Series g = (Series(1) - q * x).inverse();
    CHECK(g.term_count() == 3);
    CHECK_THROWS_AS(SeriesRing::make({"x"}, 3, {0}, {SeriesRing::kNoCap}), UsageError);
}

TEST_CASE("rational powers") {
    auto r = SeriesRing::make({"q"}, 4);
    Series f = poly(r, {1, -1});
    Series h = f.pow(Rational(1, 2));
    CHECK(h * h == f);
    for (int k = 0; k <= 4; ++k) CHECK(h.coefficient({k}) == binomial(Rational(1, 2), k) * Rational(-1).pow(k));
    CHECK(f.pow(-2l) == f.inverse() * f.inverse());
}

TEST_CASE("lift, compose and evaluate") {
    auto rq = SeriesRing::make({"q"}, 5);
    auto rxq = SeriesRing::make({"x", "q"}, 5);
    Series f = poly(rq, {1, 2, 3});
    Series g = f.lift(rxq);
    CHECK(g.coefficient({0, 2}) == Rational(3));
    Series x = Series::variable(rxq, "x"), q = Series::variable(rxq, "q");
    std::vector<Series> sub{x * q};
    Series h = f.compose(sub, rxq);
    CHECK(h.coefficient({2, 2}) == Rational(3));
    std::vector<Rational> at{Rational(1, 2)};
    CHECK(f.evaluate(std::span<const Rational>(at)) == Rational(1) + Rational(1) + Rational(3, 4));
    CHECK(g.str() == "1 + 2*q + 3*q^2");
}

TEST_CASE("exact linear division") {
    auto r = SeriesRing::make({"a", "b"}, 6);
    Series a = Series::variable(r, "a"), b = Series::variable(r, "b");
    Series fac = a - Rational(1, 2) * b;
    Series other = a * a + Rational(3) * a * b - b.pow(3l);
    CHECK(divide_by_linear(fac * other, 0, 1, Rational(1, 2)) == other);
    CHECK_THROWS_AS(divide_by_linear(other, 0, 1, Rational(1, 2)), DomainError);
}
