// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/series.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "repsym/error.hpp"

namespace repsym {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exps_.size() != other.exps_.size()) throw UsageError("monomials over different variable counts");
    Monomial r;
    r.exps_.resize(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        unsigned e = unsigned(exps_[i]) + other.exps_[i];
        if (e > std::numeric_limits<std::uint16_t>::max()) throw UsageError("monomial exponent overflow");
        r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    if (a.exps_.size() != b.exps_.size()) return a.exps_.size() <=> b.exps_.size();
    // Larger leading exponent sorts first within a degree.
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- SeriesRing

RingPtr SeriesRing::make(std::vector<std::string> variables, int bound) {
    std::vector<int> w(variables.size(), 1), c(variables.size(), kNoCap);
    return make(std::move(variables), bound, std::move(w), std::move(c));
}

RingPtr SeriesRing::make(std::vector<std::string> variables, int bound, std::vector<int> weights,
                         std::vector<int> caps) {
    if (bound < 0) throw UsageError("series truncation must be non-negative");
    if (weights.size() != variables.size() || caps.size() != variables.size())
        throw UsageError("weights/caps must match the variable list");
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i].empty()) throw UsageError("empty variable name");
        for (std::size_t j = 0; j < i; ++j)
            if (variables[i] == variables[j]) throw UsageError("duplicate variable '" + variables[i] + "'");
        if (weights[i] < 0) throw UsageError("negative variable weight");
        if (weights[i] == 0 && caps[i] == kNoCap)
            throw UsageError("zero-weight variable '" + variables[i] + "' needs a cap");
    }
    std::shared_ptr<SeriesRing> r(new SeriesRing());
    r->vars_ = std::move(variables);
    r->weights_ = std::move(weights);
    r->caps_ = std::move(caps);
    r->bound_ = bound;
    int total = 0;
    for (std::size_t i = 0; i < r->vars_.size(); ++i) {
        int limit = r->weights_[i] == 0 ? r->caps_[i] : bound / r->weights_[i];
        if (r->caps_[i] != kNoCap) limit = std::min(limit, r->caps_[i]);
        total += limit;
    }
    r->max_total_ = total;
    return r;
}

std::size_t SeriesRing::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw UsageError("unknown series variable '" + std::string(name) + "'");
}

bool SeriesRing::has(std::string_view name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int SeriesRing::weighted_degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += weights_[i] * m[i];
    return d;
}

bool SeriesRing::admits(const Monomial& m) const {
    if (m.size() != vars_.size()) return false;
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (caps_[i] != kNoCap && m[i] > caps_[i]) return false;
        d += weights_[i] * m[i];
    }
    return d <= bound_;
}

std::string SeriesRing::describe() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) os << ",";
        os << vars_[i];
        if (weights_[i] != 1) os << ":w" << weights_[i];
        if (caps_[i] != kNoCap) os << ":cap" << caps_[i];
    }
    os << "] deg<=" << bound_;
    return os.str();
}

bool operator==(const SeriesRing& a, const SeriesRing& b) {
    return a.vars_ == b.vars_ && a.weights_ == b.weights_ && a.caps_ == b.caps_ && a.bound_ == b.bound_;
}

// ------------------------------------------------------------------ Series

namespace {

void accumulate(Series::Terms& terms, const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

Series::Series(Rational scalar) {
    if (!scalar.is_zero()) terms_.emplace(Monomial(), std::move(scalar));
}

Series Series::zero(RingPtr ring) {
    if (!ring) throw UsageError("null series ring");
    Series s;
    s.ring_ = std::move(ring);
    return s;
}

Series Series::constant(RingPtr ring, const Rational& c) {
    Series s = zero(std::move(ring));
    if (!c.is_zero()) s.terms_.emplace(Monomial::one(s.ring_->size()), c);
    return s;
}

Series Series::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Series s = zero(std::move(ring));
    if (m.size() != s.ring_->size()) throw UsageError("monomial does not match ring");
    if (!c.is_zero() && s.ring_->admits(m)) s.terms_.emplace(m, c);
    return s;
}

Series Series::variable(RingPtr ring, std::string_view name) { return power_of(std::move(ring), name, 1); }

Series Series::power_of(RingPtr ring, std::string_view name, int power, const Rational& c) {
    if (!ring) throw UsageError("null series ring");
    if (power < 0) throw UsageError("negative power in power series");
    std::vector<std::uint16_t> e(ring->size(), 0);
    e[ring->index_of(name)] = static_cast<std::uint16_t>(power);
    return monomial(std::move(ring), Monomial(std::move(e)), c);
}

void Series::adopt(const RingPtr& ring) {
    if (ring_ || !ring) return;
    Terms t;
    if (!terms_.empty()) t.emplace(Monomial::one(ring->size()), terms_.begin()->second);
    terms_ = std::move(t);
    ring_ = ring;
}

void Series::check_compatible(const Series& o) const {
    if (ring_ && o.ring_ && !same_ring(ring_, o.ring_))
        throw UsageError("series over different rings: " + ring_->describe() + " vs " + o.ring_->describe());
}

void Series::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

Rational Series::constant_term() const {
    if (terms_.empty()) return Rational(0);
    const auto& [m, c] = *terms_.begin();
    return m.degree() == 0 ? c : Rational(0);
}

Rational Series::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::coefficient(std::initializer_list<int> exponents) const {
    std::vector<std::uint16_t> e;
    for (int x : exponents) e.push_back(static_cast<std::uint16_t>(x));
    if (ring_ && e.size() != ring_->size()) throw UsageError("exponent list does not match ring");
    return coefficient(Monomial(std::move(e)));
}

int Series::valuation() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
int Series::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Series Series::homogeneous_part(int total_degree) const {
    Series s;
    s.ring_ = ring_;
    for (auto& [m, c] : terms_)
        if (m.degree() == total_degree) s.terms_.emplace_hint(s.terms_.end(), m, c);
    return s;
}

Series Series::slice(std::string_view name, int power) const {
    if (!ring_) return power == 0 ? *this : Series();
    std::size_t idx = ring_->index_of(name);
    Series s = zero(ring_);
    for (auto& [m, c] : terms_)
        if (m[idx] == power) s.terms_.emplace_hint(s.terms_.end(), m, c);
    return s;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& [m, c] : s.terms_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    adopt(o.ring_);
    if (o.ring_ || !ring_) {
        for (auto& [m, c] : o.terms_) accumulate(terms_, m, c);
    } else {
        Series lifted = o;
        lifted.adopt(ring_);
        for (auto& [m, c] : lifted.terms_) accumulate(terms_, m, c);
    }
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (b.is_scalar()) return a * b.constant_term();
    if (a.is_scalar()) return b * a.constant_term();
    a.check_compatible(b);
    const SeriesRing& ring = *a.ring_;
    const int max_total = ring.max_total_degree();
    Series r = Series::zero(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree() + mb.degree() > max_total) break;
            Monomial m = ma * mb;
            if (!ring.admits(m)) continue;
            accumulate(r.terms_, m, ca * cb);
        }
    }
    return r;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series& Series::operator/=(const Series& o) { return *this *= o.inverse(); }

bool operator==(const Series& a, const Series& b) {
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) return false;
    if (a.ring_ && !b.ring_) {
        Series t = b;
        t.adopt(a.ring_);
        return a.terms_ == t.terms_;
    }
    if (b.ring_ && !a.ring_) return b == a;
    return a.terms_ == b.terms_;
}

namespace {

std::vector<Series> components(const Series& s, int max_total) {
    std::vector<Series> out(static_cast<std::size_t>(max_total) + 1, Series::zero(s.ring()));
    for (auto& [m, c] : s.terms())
        if (m.degree() <= max_total) out[m.degree()] += Series::monomial(s.ring(), m, c);
    return out;
}

}  // namespace

Series Series::inverse() const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw DomainError("series with zero constant term is not invertible");
    if (!ring_) return Series(c0.inverse());
    const int T = ring_->max_total_degree();
    auto f = components(*this, T);
    Rational inv0 = c0.inverse();
    std::vector<Series> g(static_cast<std::size_t>(T) + 1, zero(ring_));
    g[0] = constant(ring_, inv0);
    for (int n = 1; n <= T; ++n) {
        Series acc = zero(ring_);
        for (int k = 1; k <= n; ++k)
            if (!f[k].is_zero() && !g[n - k].is_zero()) acc += f[k] * g[n - k];
        g[n] = acc * (-inv0);
    }
    Series r = zero(ring_);
    for (auto& part : g) r += part;
    return r;
}

Series Series::exp() const {
    if (!constant_term().is_zero()) throw UsageError("series_exp requires a zero constant term");
    if (!ring_) return Series(Rational(1));
    const int T = ring_->max_total_degree();
    auto a = components(*this, T);
    std::vector<Series> f(static_cast<std::size_t>(T) + 1, zero(ring_));
    f[0] = constant(ring_, Rational(1));
    for (int n = 1; n <= T; ++n) {
        Series acc = zero(ring_);
        for (int k = 1; k <= n; ++k)
            if (!a[k].is_zero() && !f[n - k].is_zero()) acc += (a[k] * f[n - k]) * Rational(k);
        f[n] = acc * Rational(1, n);
    }
    Series r = zero(ring_);
    for (auto& part : f) r += part;
    return r;
}

Series Series::log() const {
    if (!constant_term().is_one()) throw UsageError("series_log requires constant term 1");
    if (!ring_) return Series();
    const int T = ring_->max_total_degree();
    auto f = components(*this, T);
    std::vector<Series> a(static_cast<std::size_t>(T) + 1, zero(ring_));
    for (int n = 1; n <= T; ++n) {
        Series acc = f[n] * Rational(n);
        for (int k = 1; k < n; ++k)
            if (!a[k].is_zero() && !f[n - k].is_zero()) acc -= (a[k] * f[n - k]) * Rational(k);
        a[n] = acc * Rational(1, n);
    }
    Series r = zero(ring_);
    for (auto& part : a) r += part;
    return r;
}

Series Series::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Series result(Rational(1));
    result.adopt(ring_);
    Series base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

Series Series::pow(const Rational& exponent) const {
    if (exponent.is_integer()) return pow(exponent.to_long());
    if (!constant_term().is_one())
        throw UsageError("non-integer power requires constant term 1");
    if (!ring_) return *this;
    return (log() * exponent).exp();
}

Series Series::lift(const RingPtr& target) const {
    if (!target) throw UsageError("null target ring");
    if (!ring_) {
        Series s = *this;
        s.adopt(target);
        return s;
    }
    std::vector<int> map(ring_->size(), -1);
    for (std::size_t i = 0; i < ring_->size(); ++i)
        if (target->has(ring_->variables()[i])) map[i] = static_cast<int>(target->index_of(ring_->variables()[i]));
    Series r = zero(target);
    for (auto& [m, c] : terms_) {
        std::vector<std::uint16_t> e(target->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0) throw UsageError("variable '" + ring_->variables()[i] + "' missing in target ring");
            e[map[i]] = static_cast<std::uint16_t>(m[i]);
        }
        Monomial mm(std::move(e));
        if (target->admits(mm)) accumulate(r.terms_, mm, c);
    }
    return r;
}

Series Series::compose(std::span<const Series> values, const RingPtr& target) const {
    if (!ring_) return lift(target);
    if (values.size() != ring_->size()) throw UsageError("compose needs one value per variable");
    std::vector<std::vector<Series>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const Series& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Series::constant(target, Rational(1)));
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * values[i].lift(target));
        return pw[e];
    };
    Series r = zero(target);
    for (auto& [m, c] : terms_) {
        Series t = constant(target, c);
        for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
            if (m[i]) t *= power(i, m[i]);
        r += t;
    }
    return r;
}

Rational Series::evaluate(std::span<const Rational> values) const {
    if (ring_ && values.size() != ring_->size()) throw UsageError("evaluate needs one value per variable");
    Rational r(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= values[i].pow(m[i]);
        r += t;
    }
    return r;
}

Complex Series::evaluate(std::span<const Complex> values) const {
    if (ring_ && values.size() != ring_->size()) throw UsageError("evaluate needs one value per variable");
    Complex r(0.0, 0.0);
    for (auto& [m, c] : terms_) {
        Complex t(c.to_double(), 0.0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t *= std::pow(values[i], m[i]);
        r += t;
    }
    return r;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (!mag.is_one() || m.degree() == 0) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (wrote) os << "*";
            os << ring_->variables()[i];
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

Series series_mul(const Series& a, const Series& b) { return a * b; }
Series series_exp(const Series& a) { return a.exp(); }
Series series_log(const Series& a) { return a.log(); }

Series divide_by_linear(const Series& p, std::size_t i, std::size_t j, const Rational& c) {
    if (p.is_zero()) return p;
    const RingPtr& ring = p.ring();
    if (!ring || i >= ring->size() || j >= ring->size() || i == j)
        throw UsageError("divide_by_linear needs two distinct ring variables");
    // Group by the exponent of x_i: p = sum_k P_k x_i^k.
    int top = 0;
    for (auto& [m, v] : p.terms()) top = std::max(top, m[i]);
    std::vector<Series::Terms> P(static_cast<std::size_t>(top) + 1);
    for (auto& [m, v] : p.terms()) {
        auto e = m.exponents();
        int k = e[i];
        e[i] = 0;
        P[k].emplace(Monomial(std::move(e)), v);
    }
    auto times_xj = [&](const Series::Terms& t) {
        Series::Terms out;
        for (auto& [m, v] : t) {
            auto e = m.exponents();
            ++e[j];
            out.emplace(Monomial(std::move(e)), v * c);
        }
        return out;
    };
    // p = (x_i - c x_j) q with q = sum_k Q_k x_i^k:  P_k = Q_{k-1} - c x_j Q_k.
    std::vector<Series::Terms> Q(static_cast<std::size_t>(top) + 1);
    for (int k = top; k >= 1; --k) {
        Series::Terms qk = P[k];
        if (k < top)
            for (auto& [m, v] : times_xj(Q[k])) accumulate(qk, m, v);
        Q[k - 1] = std::move(qk);
    }
    Series::Terms rem = P[0];
    for (auto& [m, v] : times_xj(Q[0])) accumulate(rem, m, v);
    if (!rem.empty()) throw DomainError("polynomial is not divisible by the linear factor");
    Series q = Series::zero(ring);
    for (int k = 0; k < top; ++k)
        for (auto& [m, v] : Q[k]) {
            auto e = m.exponents();
            e[i] = static_cast<std::uint16_t>(k);
            q += Series::monomial(ring, Monomial(std::move(e)), v);
        }
    return q;
}

}  // namespace repsym
