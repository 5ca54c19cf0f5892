// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "repsym/partitions.hpp"
#include "repsym/rational.hpp"
#include "repsym/series.hpp"

namespace repsym {

enum class Basis { p, e, h, m, s };

std::string basis_name(Basis b);
/// Accepts "p", "e", "h", "m", "s"; throws UsageError otherwise.
Basis parse_basis(std::string_view name);

/// Element of the ring of symmetric functions in a fixed basis.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    explicit SymFunc(Basis basis = Basis::p) : basis_(basis) {}
    SymFunc(Basis basis, Terms terms);
    static SymFunc element(Basis basis, const Partition& lambda, const Rational& c = Rational(1));
    static SymFunc one(Basis basis = Basis::p) { return element(basis, Partition()); }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }
    /// Largest weight present, -1 for zero.
    int degree() const;
    /// The weight-n part.
    SymFunc homogeneous_part(int n) const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    /// Product, expressed in the basis of the left operand.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    /// Equality as elements of the ring (converts when the bases differ).
    friend bool operator==(const SymFunc& a, const SymFunc& b);

    std::string str() const;

private:
    Basis basis_;
    Terms terms_;
};

SymFunc convert(const SymFunc& f, Basis target);

/// Coefficients of the weight-n basis elements over the power sums:
/// b_lambda = sum_rho M[lambda][rho] p_rho, rows and columns indexed by
/// enumerate_partitions(n). Cached per degree, safe for concurrent use.
const std::vector<std::vector<Rational>>& to_power_sums(Basis b, int n);
/// Inverse matrix: p_rho = sum_lambda M[rho][lambda] b_lambda.
const std::vector<std::vector<Rational>>& from_power_sums(Basis b, int n);

/// chi^lambda_rho by the Murnaghan-Nakayama rule (memoized).
long character(const Partition& lambda, const Partition& rho);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;
    /// values[i][j] = chi^{partitions[i]}_{partitions[j]}
    std::vector<std::vector<long>> values;
};
CharacterTable character_table(int n);

/// Schur-Hall product, <p_rho, p_sigma> = z_rho delta.
Rational scalar_product(const SymFunc& f, const SymFunc& g);

/// det(h_{lambda_i - i + j}) expanded in the h basis.
SymFunc jacobi_trudi(const Partition& lambda);
/// det(e_{lambda'_i - i + j}) expanded in the e basis.
SymFunc jacobi_trudi_dual(const Partition& lambda);

/// omega(p_n) = (-1)^{n-1} p_n; result in the input basis.
SymFunc omega(const SymFunc& f);

/// c^lambda_{mu nu} = <s_mu s_nu, s_lambda>.
Rational lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
/// s_{lambda/mu} in the s basis; zero unless mu is contained in lambda.
SymFunc skew_schur(const Partition& lambda, const Partition& mu);

/// Coefficients of t^0..t^D: sign +1 gives F = sum h_m t^m, sign -1 gives
/// G = sum (-1)^m e_m t^m.
std::vector<SymFunc> series_FG(int sign, int D);

/// p_n -> tau p_n; result in the input basis.
SymFunc replicate(const SymFunc& f, const Rational& tau);

/// A weighted alphabet: power sums p_n = sum_i w_i v_i^n, with v_i series
/// values over a common ring. Union concatenates; replication scales weights.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(RingPtr ring) : ring_(std::move(ring)) {}
    /// Ring variables by name, each with weight 1.
    static Alphabet of_variables(const RingPtr& ring, const std::vector<std::string>& names);
    /// Single letter value v with weight w (e.g. v = 1, w = alpha gives p_n = alpha).
    static Alphabet letter(const RingPtr& ring, const Series& value, const Rational& weight = Rational(1));

    const RingPtr& ring() const { return ring_; }
    Alphabet replicated(const Rational& tau) const;
    Alphabet operator+(const Alphabet& other) const;
    Series power_sum(int n) const;
    bool empty() const { return letters_.empty(); }

private:
    RingPtr ring_;
    std::vector<std::pair<Series, Rational>> letters_;
};

/// f evaluated at an alphabet (through the p expansion).
Series evaluate(const SymFunc& f, const Alphabet& x);

struct CauchyReport {
    bool ok = true;
    bool kernel_ok = true;
    bool dual_ok = true;
    /// Series difference of the first failing identity (empty when ok).
    std::string counterexample;
};

/// sum_{|lambda|<=D} s_lambda(X) s_lambda(Y) = prod (1 - x_i y_j)^{-1} and
/// sum (-q)^{|a|} s_a(X) s_{a'}(Y) = prod (1 - q x_i y_j), in nx + ny
/// variables truncated at total degree 2D.
CauchyReport cauchy_schur_check(int nx, int ny, int D, const Rational& q = Rational(1));

}  // namespace repsym
