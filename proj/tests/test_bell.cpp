// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include <functional>
#include <random>

#include "doctest.h"
#include "repsym/bell.hpp"
#include "repsym/error.hpp"

using namespace repsym;

namespace {

std::vector<Rational> rv(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Y_n(g) as a sum over set partitions of {1..n}: each block of size s
// contributes g_s.
Rational set_partition_oracle(int n, const std::vector<Rational>& g) {
    Rational total(0);
    std::vector<int> block_sizes;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            Rational term(1);
            for (int s : block_sizes) term *= g[s - 1];
            total += term;
            return;
        }
        for (std::size_t b = 0; b < block_sizes.size(); ++b) {
            ++block_sizes[b];
            rec(i + 1);
            --block_sizes[b];
        }
        block_sizes.push_back(1);
        rec(i + 1);
        block_sizes.pop_back();
    };
    rec(0);
    return total;
}

}  // namespace

TEST_CASE("bell_recurrence small values") {
    std::vector<Rational> none;
    CHECK(bell_recurrence<Rational>(0, none) == Rational(1));
    auto g = rv({7});
    CHECK(bell_recurrence<Rational>(1, g) == Rational(7));
    auto g3 = std::vector<Rational>{Rational(2), Rational(-1, 3), Rational(5)};
    CHECK(bell_recurrence<Rational>(3, g3) ==
          g3[0].pow(3) + Rational(3) * g3[0] * g3[1] + g3[2]);
    CHECK_THROWS_AS(bell_recurrence<Rational>(3, std::span<const Rational>(g3).first(2)), UsageError);
}

TEST_CASE("bell_faa_di_bruno examples") {
    CHECK(bell_faa_di_bruno<Rational>(2, rv({1, 1})) == Rational(2));
    CHECK(bell_faa_di_bruno<Rational>(3, rv({1, 0, 0})) == Rational(1));
    CHECK(bell_faa_di_bruno<Rational>(4, rv({1, 1, 1, 1})) == Rational(15));
}

TEST_CASE("recurrence, Faa di Bruno and set-partition oracle agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> g;
        for (int i = 0; i < 8; ++i) g.emplace_back(num(rng), den(rng));
        for (int n = 0; n <= 8; ++n) {
            Rational a = bell_recurrence<Rational>(n, g);
            CHECK(a == bell_faa_di_bruno<Rational>(n, g));
            if (n <= 7) CHECK(a == set_partition_oracle(n, g));
        }
    }
}

TEST_CASE("bell_generating_check") {
    auto r1 = bell_generating_check(rv({1, 0, 0, 0}), 4);
    CHECK(r1.ok);
    CHECK(r1.y == rv({1, 1, 1, 1, 1}));
    auto r2 = bell_generating_check(rv({1, 1, 1, 1}), 4);
    CHECK(r2.ok);
    CHECK(r2.y == rv({1, 1, 2, 5, 15}));
    auto r3 = bell_generating_check(rv({0, 2, 0, 0}), 4);
    CHECK(r3.ok);
    // exp(z^2) = 1 + z^2 + z^4/2, so Y_2 = 2 and Y_4 = 12.
    CHECK(r3.y[2] == Rational(2));
    CHECK(r3.y[4] == Rational(12));
}

TEST_CASE("homogeneity of the partial Bell components") {
    // Y_n(c g) expanded in a formal c: the c^j part is B_{n,j}(g).
    auto ring = SeriesRing::make({"c"}, 8);
    Series c = Series::variable(ring, "c");
    std::vector<Rational> g{Rational(1, 2), Rational(-3), Rational(2, 5), Rational(1), Rational(-1, 4),
                            Rational(3), Rational(1, 7), Rational(2)};
    std::vector<Series> scaled;
    for (auto& x : g) scaled.push_back(c * x);
    for (int n = 1; n <= 8; ++n) {
        Series y = bell_recurrence<Series>(n, scaled);
        for (int j = 0; j <= 8; ++j) {
            Rational expect = j == 0 ? Rational(0) : bell_partial<Rational>(n, j, g);
            CHECK(y.coefficient({j}) == expect);
        }
        // Evaluation at two scalings separates the components consistently.
        std::vector<Rational> two;
        for (auto& x : g) two.push_back(Rational(2) * x);
        Rational direct = bell_recurrence<Rational>(n, two);
        Rational sum(0);
        for (int j = 1; j <= n; ++j) sum += Rational(2).pow(j) * bell_partial<Rational>(n, j, g);
        CHECK(direct == sum);
    }
}
