// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repsym/complex.hpp"
#include "repsym/rational.hpp"

namespace repsym {

/// Exponent vector of a monomial. Ordered by total degree, then with larger
/// leading exponents first, so maps of monomials iterate in graded order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint16_t>(nvars, 0)); }

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int degree() const { return degree_; }
    const std::vector<std::uint16_t>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint16_t> exps_;
    int degree_ = 0;
};

/// Variables plus the monomial ideal that is truncated away. A monomial
/// survives iff sum_i weight_i * e_i <= bound and e_i <= cap_i for capped
/// variables. The default ring uses unit weights and no caps, i.e. plain
/// total-degree truncation.
class SeriesRing {
public:
    static constexpr int kNoCap = -1;

    static std::shared_ptr<const SeriesRing> make(std::vector<std::string> variables, int bound);
    /// Zero-weight variables must carry a cap so the quotient stays finite.
    static std::shared_ptr<const SeriesRing> make(std::vector<std::string> variables, int bound,
                                                  std::vector<int> weights, std::vector<int> caps);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    int bound() const { return bound_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<int>& caps() const { return caps_; }

    /// Index of a variable; throws UsageError if absent.
    std::size_t index_of(std::string_view name) const;
    bool has(std::string_view name) const;
    bool admits(const Monomial& m) const;
    int weighted_degree(const Monomial& m) const;
    /// Upper bound on the total degree of any surviving monomial.
    int max_total_degree() const { return max_total_; }

    std::string describe() const;
    friend bool operator==(const SeriesRing& a, const SeriesRing& b);

private:
    SeriesRing() = default;
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::vector<int> caps_;
    int bound_ = 0;
    int max_total_ = 0;
};

using RingPtr = std::shared_ptr<const SeriesRing>;

/// Truncated multivariate formal power series with exact rational
/// coefficients. A series without a ring is a bare scalar that adopts the
/// ring of whatever it is combined with; two series over different rings
/// cannot be combined.
class Series {
public:
    using Terms = std::map<Monomial, Rational>;

    Series() = default;
    Series(Rational scalar);  // NOLINT: scalars promote implicitly
    Series(long scalar) : Series(Rational(scalar)) {}  // NOLINT

    static Series zero(RingPtr ring);
    static Series constant(RingPtr ring, const Rational& c);
    static Series variable(RingPtr ring, std::string_view name);
    static Series monomial(RingPtr ring, const Monomial& m, const Rational& c = Rational(1));
    /// c * name^power, truncated.
    static Series power_of(RingPtr ring, std::string_view name, int power, const Rational& c = Rational(1));

    const RingPtr& ring() const { return ring_; }
    bool is_scalar() const { return !ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    /// Coefficient by exponent list in ring variable order.
    Rational coefficient(std::initializer_list<int> exponents) const;
    /// Lowest total degree present; -1 for the zero series.
    int valuation() const;
    /// Largest total degree present; -1 for the zero series.
    int max_degree() const;
    Series homogeneous_part(int total_degree) const;
    /// Terms whose exponent of `name` equals `power`, with that variable kept.
    Series slice(std::string_view name, int power) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rational& c);
    Series& operator/=(const Series& o);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator/(Series a, const Series& b) { return a /= b; }
    friend bool operator==(const Series& a, const Series& b);

    /// Requires an invertible constant term.
    Series inverse() const;
    Series exp() const;
    Series log() const;
    /// Integer power (negative exponents invert).
    Series pow(long exponent) const;
    /// Rational power; requires constant term 1 unless the exponent is an integer.
    Series pow(const Rational& exponent) const;

    /// Re-expresses this series over `target`, matching variables by name and
    /// dropping monomials the target truncates away. Every variable in use
    /// must exist in the target.
    Series lift(const RingPtr& target) const;
    /// Substitutes series values (over `target`) for every ring variable.
    Series compose(std::span<const Series> values, const RingPtr& target) const;
    Rational evaluate(std::span<const Rational> values) const;
    Complex evaluate(std::span<const Complex> values) const;

    std::string str() const;

private:
    void adopt(const RingPtr& ring);
    void check_compatible(const Series& o) const;
    void prune();

    RingPtr ring_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Series& s);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Series& s) { return s.is_zero(); }
inline bool is_invertible(const Rational& r) { return !r.is_zero(); }
inline bool is_invertible(const Series& s) { return !s.constant_term().is_zero(); }

Series series_mul(const Series& a, const Series& b);
Series series_exp(const Series& a);
Series series_log(const Series& a);

/// Exact division of a polynomial by (x_i - c x_j); throws DomainError if the
/// division leaves a remainder.
Series divide_by_linear(const Series& p, std::size_t i, std::size_t j, const Rational& c);

}  // namespace repsym
