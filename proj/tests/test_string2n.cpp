// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "repsym/error.hpp"
#include "repsym/string2n.hpp"

using namespace repsym;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix2 mul(const Matrix2& l, const Matrix2& r) {
    Matrix2 o{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) o[i][j] += l[i][k] * r[k][j];
    return o;
}

Matrix2 full(const TransferMatrix& t) { return Matrix2{{{t.a, t.b}, {t.c(), t.d()}}}; }

// det(s^N Omega^N - I) by N plain products and a complex determinant.
double dispersion_oracle(double x, int N, double omega) {
    double eps = (1 - x) / (1 + x), p = kPi * omega / N;
    Complex e = std::exp(Complex(0, -p));
    Matrix2 om{{{e - eps * eps, eps * (e - 1.0)}, {eps * (std::conj(e) - 1.0), std::conj(e) - eps * eps}}};
    Matrix2 M{{{1.0, 0.0}, {0.0, 1.0}}};
    for (int k = 0; k < N; ++k) M = mul(M, om);
    double s = std::pow((1 + x) * (1 + x) / (4 * x), N);
    Complex d = (s * M[0][0] - 1.0) * (s * M[1][1] - 1.0) - s * M[0][1] * s * M[1][0];
    return d.real();
}

void check_close_sets(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

}  // namespace

TEST_CASE("omega matrix entries") {
    auto o = omega_matrix(0.0, 0.7);
    CHECK(std::abs(o.a - std::exp(Complex(0, -0.7))) < 1e-15);
    CHECK(std::abs(o.b) == 0.0);
    o = omega_matrix(0.3, 0.0);
    CHECK(std::abs(o.a - 0.91) < 1e-15);
    CHECK(std::abs(o.b) < 1e-15);
    o = omega_matrix(0.5, kPi);
    CHECK(std::abs(o.a - Complex(-1.25, 0)) < 1e-15);
    CHECK(std::abs(o.b - Complex(-1.0, 0)) < 1e-15);
    CHECK(std::abs(o.det() - 9.0 / 16) < 1e-15);
}

TEST_CASE("omega determinant over random samples") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> ue(0.0, 0.95), up(0.0, 2 * kPi);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        double e = ue(gen), p = up(gen);
        double expect = (1 - e * e) * (1 - e * e);
        worst = std::max(worst, std::abs(omega_matrix(e, p).det() - expect) / expect);
    }
    CHECK(worst < 1e-12);
    // up to eps -> 1 the entries' rounding alone moves det by ~u / (1 - eps)^2
    std::uniform_real_distribution<double> full(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double e = full(gen), p = up(gen);
        double expect = (1 - e * e) * (1 - e * e);
        double bound = 64 * std::numeric_limits<double>::epsilon() / ((1 - e) * (1 - e));
        CHECK(std::abs(omega_matrix(e, p).det() - expect) / expect <= bound);
    }
}

TEST_CASE("powers of omega") {
    for (double e : {0.0, 0.2, 0.6, -0.45})
        for (double p : {0.3, 1.9, 4.4})
            for (int N = 1; N <= 6; ++N) {
                Matrix2 ref{{{1.0, 0.0}, {0.0, 1.0}}};
                for (int k = 0; k < N; ++k) ref = mul(ref, full(omega_matrix(e, p)));
                auto m = m2N(e, p, N);
                Matrix2 got = full(m);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) CHECK(std::abs(got[i][j] - ref[i][j]) < 1e-12);
                CHECK(std::abs(m.det() - std::pow(1 - e * e, 2 * N)) < 1e-12);
                CHECK(junction_product(e, p, N).deviation < 1e-12);
            }
    auto o = omega_matrix(0.35, 1.1), o2 = m2N(0.35, 1.1, 2);
    CHECK(std::abs(o2.trace() - (o.trace() * o.trace() - 2 * o.det())) < 1e-14);
    auto d = m2N(0.0, 0.4, 1);
    CHECK(std::abs(d.a - std::exp(Complex(0, -0.4))) < 1e-15);
}

TEST_CASE("dispersion: both routes against the plain determinant") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> ux(0.05, 1.0), uw(0.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        double x = ux(gen), w = uw(gen);
        int N = 1 + i % 4;
        auto cfg = StringConfig::make(x, N);
        double ref = dispersion_oracle(x, N, w), tol = 1e-8 * std::max(1.0, std::abs(ref));
        CHECK(std::abs(dispersion(cfg, w) - ref) < tol);
        CHECK(std::abs(dispersion_stable(cfg, w) - ref) < tol);
    }
    for (int N = 1; N <= 3; ++N) {
        CHECK(std::abs(dispersion(StringConfig::make(0.3, N), 0.0)) < 1e-14);
        CHECK(dispersion_stable(StringConfig::make(0.3, N), 0.0) == 0.0);
        for (double w : {0.37, 1.5, 3.0})
            CHECK(std::abs(dispersion(StringConfig::make(1.0, N), w) - 4 * std::pow(std::sin(kPi * w / 2), 2)) < 1e-12);
    }
}

TEST_CASE("uniform string spectrum") {
    auto cfg = StringConfig::make(1.0, 1);
    auto roots = eigenfrequencies(cfg, 20.0);
    std::vector<double> expect;
    for (int n = 1; n <= 10; ++n) expect.push_back(2.0 * n);
    check_close_sets(roots, expect, 1e-8);
    for (double wmax : {5.0, 13.7, 40.0}) {
        double c = static_cast<double>(eigenfrequencies(cfg, wmax).size());
        CHECK(std::abs(c - wmax / 2) <= 1.0);
    }
    CHECK(eigenfrequencies(cfg, 20.0, 3).size() == 3);
    RootOptions mat;
    mat.route = DispersionRoute::matrix;
    check_close_sets(eigenfrequencies(cfg, 20.0, 0, mat), expect, 1e-8);
}

TEST_CASE("spectrum invariant under x -> 1/x") {
    for (double x : {0.25, 0.5})
        for (int N = 1; N <= 3; ++N) {
            auto a = eigenfrequencies(StringConfig::make(x, N), 12.0);
            auto b = eigenfrequencies(StringConfig::make(1 / x, N), 12.0);
            CHECK(!a.empty());
            check_close_sets(a, b, 1e-9);
        }
}

TEST_CASE("both dispersion routes give one spectrum") {
    RootOptions mat;
    mat.route = DispersionRoute::matrix;
    for (double x : {0.2, 0.7})
        for (int N = 2; N <= 4; ++N)
            check_close_sets(eigenfrequencies(StringConfig::make(x, N), 9.0),
                             eigenfrequencies(StringConfig::make(x, N), 9.0, 0, mat), 1e-8);
}

TEST_CASE("extreme tension spectrum") {
    const double x = 1e-6;
    const int N = 2;
    auto roots = eigenfrequencies(StringConfig::make(x, N), 12.5);
    // band edges sin(p/2) = sqrt(1 - eps^2) sit beside each 2Nn
    double delta = 2.0 * N / kPi * std::asin(2 * std::sqrt(x) / (1 + x));
    std::vector<double> expect{delta};
    for (int n = 1; n <= 3; ++n)
        for (double w : {2.0 * N * n - delta, 2.0 * N * n, 2.0 * N * n + delta}) expect.push_back(w);
    check_close_sets(roots, expect, 1e-8);
    MESSAGE("extreme tension N=2: satellites at 2Nn +- " << delta);
}

TEST_CASE("omega eigenvalues") {
    auto [lp, lm] = omega_eigenvalues(0.0, 0.9);
    CHECK(std::abs(std::abs(lp) - 1) < 1e-14);
    CHECK((std::abs(lp - std::exp(Complex(0, 0.9))) < 1e-14 || std::abs(lp - std::exp(Complex(0, -0.9))) < 1e-14));
    CHECK(std::abs(lp * lm - 1.0) < 1e-14);
    for (double p : {0.0, 0.8, 2.5}) {
        auto [a, b] = omega_eigenvalues(1.0, p);
        CHECK(std::abs(b) < 1e-14);
        CHECK(std::abs(a - 2 * (std::cos(p) - 1)) < 1e-14);
    }
    auto [c, d] = omega_eigenvalues(0.5, 0.0);
    CHECK(std::abs(c - 0.75) < 1e-7);
    CHECK(std::abs(d - 0.75) < 1e-7);
    auto o = omega_matrix(0.4, 1.3);
    auto [e, f] = omega_eigenvalues(0.4, 1.3);
    CHECK(std::abs(e + f - o.trace()) < 1e-14);
    CHECK(std::abs(e * f - o.det()) < 1e-14);
}

TEST_CASE("string argument errors") {
    CHECK_THROWS_AS(StringConfig::make(0.0, 1), UsageError);
    CHECK_THROWS_AS(StringConfig::make(0.5, 0), UsageError);
    CHECK_THROWS_AS(eigenfrequencies(StringConfig::make(0.5, 1), -1.0), UsageError);
    CHECK(StringConfig::make(3.0, 1).epsilon() == doctest::Approx(-0.5));
}
