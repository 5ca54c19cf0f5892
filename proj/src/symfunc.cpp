// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "repsym/error.hpp"

namespace repsym {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::m: return "m";
        case Basis::s: return "s";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    if (name == "p") return Basis::p;
    if (name == "e") return Basis::e;
    if (name == "h") return Basis::h;
    if (name == "m") return Basis::m;
    if (name == "s") return Basis::s;
    throw UsageError("unknown basis '" + std::string(name) + "' (expected p, e, h, m or s)");
}

// ------------------------------------------------------------------ SymFunc

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const Rational& c) {
    SymFunc f(basis);
    if (!c.is_zero()) f.terms_.emplace(lambda, c);
    return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

SymFunc SymFunc::homogeneous_part(int n) const {
    SymFunc f(basis_);
    for (const auto& [lam, c] : terms_)
        if (lam.weight() == n) f.terms_.emplace(lam, c);
    return f;
}

SymFunc SymFunc::operator-() const {
    SymFunc f = *this;
    for (auto& [lam, c] : f.terms_) c = -c;
    return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    const SymFunc& other = o.basis_ == basis_ ? o : convert(o, basis_);
    for (const auto& [lam, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(lam, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [lam, v] : terms_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    // h, e and p are multiplicative: products are unions of parts.
    auto multiplicative = [](Basis x) { return x == Basis::p || x == Basis::h || x == Basis::e; };
    Basis work = multiplicative(a.basis()) ? a.basis() : Basis::p;
    SymFunc x = convert(a, work), y = convert(b, work);
    SymFunc::Terms out;
    for (const auto& [l1, c1] : x.terms())
        for (const auto& [l2, c2] : y.terms()) {
            auto [it, inserted] = out.try_emplace(l1 + l2, c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    return convert(SymFunc(work, std::move(out)), a.basis());
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
    return a.terms_ == convert(b, a.basis_).terms_;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational mag = c.abs();
        if (!mag.is_one()) os << mag.str() << "*";
        os << basis_name(basis_) << lam.str();
    }
    return os.str();
}

// -------------------------------------------------------- transition data

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix m = a, inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw DomainError("singular transition matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational scale = m[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
                if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

using PSum = std::map<Partition, Rational>;

PSum pmul(const PSum& a, const PSum& b) {
    PSum out;
    for (const auto& [l1, c1] : a)
        for (const auto& [l2, c2] : b) out[l1 + l2] += c1 * c2;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// h_k or e_k over the power sums.
PSum single(Basis b, int k) {
    PSum out;
    for (const auto& rho : enumerate_partitions(k)) {
        Rational c = z_lambda(rho).inverse();
        if (b == Basis::e && (k - rho.length()) % 2) c = -c;
        out[rho] = c;
    }
    return out;
}

// Number of ways to distribute the parts of rho into slots of sizes lambda.
long monomial_count(const Partition& rho, const Partition& lambda) {
    std::vector<int> room = lambda.parts();
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rho.parts().size()) {
            count += std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
            return;
        }
        for (auto& r : room) {
            if (r >= rho.parts()[i]) {
                r -= rho.parts()[i];
                rec(i + 1);
                r += rho.parts()[i];
            }
        }
    };
    rec(0);
    return count;
}

struct DegreeData {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::map<Basis, Matrix> to_p, from_p;
};

std::shared_ptr<const DegreeData> build_degree(int n) {
    auto d = std::make_shared<DegreeData>();
    d->parts = enumerate_partitions(n);
    const std::size_t N = d->parts.size();
    for (std::size_t i = 0; i < N; ++i) d->index[d->parts[i]] = i;
    auto row_of = [&](const PSum& ps) {
        std::vector<Rational> row(N, Rational(0));
        for (const auto& [rho, c] : ps) row[d->index.at(rho)] = c;
        return row;
    };
    Matrix id(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t i = 0; i < N; ++i) id[i][i] = Rational(1);
    d->to_p[Basis::p] = id;
    d->from_p[Basis::p] = id;
    for (Basis b : {Basis::h, Basis::e}) {
        Matrix m;
        for (const auto& lam : d->parts) {
            PSum acc{{Partition(), Rational(1)}};
            for (int part : lam.parts()) acc = pmul(acc, single(b, part));
            m.push_back(row_of(acc));
        }
        d->from_p[b] = invert(m);
        d->to_p[b] = std::move(m);
    }
    Matrix schur(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            schur[i][j] = Rational(character(d->parts[i], d->parts[j])) / z_lambda(d->parts[j]);
    d->from_p[Basis::s] = invert(schur);
    d->to_p[Basis::s] = std::move(schur);
    Matrix pm(N, std::vector<Rational>(N, Rational(0)));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) pm[i][j] = Rational(monomial_count(d->parts[i], d->parts[j]));
    d->to_p[Basis::m] = invert(pm);
    d->from_p[Basis::m] = std::move(pm);
    return d;
}

std::shared_ptr<const DegreeData> degree_data(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const DegreeData>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto built = build_degree(n);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(built)).first->second;
}

}  // namespace

const std::vector<std::vector<Rational>>& to_power_sums(Basis b, int n) { return degree_data(n)->to_p.at(b); }

const std::vector<std::vector<Rational>>& from_power_sums(Basis b, int n) {
    return degree_data(n)->from_p.at(b);
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    std::map<int, std::vector<Rational>> by_degree;
    SymFunc::Terms out;
    for (const auto& [lam, c] : f.terms()) {
        auto d = degree_data(lam.weight());
        auto& v = by_degree[lam.weight()];
        if (v.empty()) v.assign(d->parts.size(), Rational(0));
        v[d->index.at(lam)] += c;
    }
    for (auto& [n, v] : by_degree) {
        auto d = degree_data(n);
        const std::size_t N = d->parts.size();
        const Matrix& a = d->to_p.at(f.basis());
        const Matrix& b = d->from_p.at(target);
        std::vector<Rational> p(N, Rational(0)), t(N, Rational(0));
        for (std::size_t i = 0; i < N; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t j = 0; j < N; ++j)
                if (!a[i][j].is_zero()) p[j] += v[i] * a[i][j];
        }
        for (std::size_t j = 0; j < N; ++j) {
            if (p[j].is_zero()) continue;
            for (std::size_t k = 0; k < N; ++k)
                if (!b[j][k].is_zero()) t[k] += p[j] * b[j][k];
        }
        for (std::size_t k = 0; k < N; ++k)
            if (!t[k].is_zero()) out.emplace(d->parts[k], t[k]);
    }
    return SymFunc(target, std::move(out));
}

// ---------------------------------------------------------------- characters

namespace {

long mn_rec(const std::vector<int>& beta, const std::vector<int>& rho, std::size_t at);

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    const int l = static_cast<int>(beta.size());
    for (int i = 0; i < l; ++i) {
        int part = beta[i] - (l - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

}  // namespace

long character(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw UsageError("character: weights differ: " + lambda.str() + " vs " + rho.str());
    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, long> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({lambda, rho});
        if (it != memo.end()) return it->second;
    }
    long value;
    if (rho.empty()) {
        value = 1;
    } else {
        // Remove a border strip of length rho_1, i.e. slide one bead down.
        const int l = lambda.length();
        std::vector<int> beta;
        for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + (l - 1 - i));
        const int r = rho[0];
        Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
        value = 0;
        for (int b : beta) {
            int target = b - r;
            if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int between = 0;
            for (int c : beta) between += c > target && c < b;
            std::vector<int> moved = beta;
            std::replace(moved.begin(), moved.end(), b, target);
            long sub = character(from_beta(moved), rest);
            value += between % 2 ? -sub : sub;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(lambda, rho), value);
    return value;
}

CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    t.partitions = enumerate_partitions(n);
    for (const auto& lam : t.partitions) {
        std::vector<long> row;
        for (const auto& rho : t.partitions) row.push_back(character(lam, rho));
        t.values.push_back(std::move(row));
    }
    return t;
}

// ------------------------------------------------------------- operations

Rational scalar_product(const SymFunc& f, const SymFunc& g) {
    SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
    Rational total(0);
    for (const auto& [rho, c] : a.terms()) {
        Rational d = b.coefficient(rho);
        if (!d.is_zero()) total += c * d * z_lambda(rho);
    }
    return total;
}

namespace {

// det(a_{row_i - i + j}) over the multiplicative basis `b`.
SymFunc determinant_expansion(Basis b, const std::vector<int>& rows) {
    const int l = static_cast<int>(rows.size());
    SymFunc::Terms acc;
    std::vector<bool> used(l, false);
    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int i, int sign) {
        if (i == l) {
            std::vector<int> parts;
            for (int k : chosen)
                if (k > 0) parts.push_back(k);
            acc[Partition(parts)] += Rational(sign);
            return;
        }
        for (int j = 0; j < l; ++j) {
            if (used[j]) continue;
            int k = rows[i] - i + j;
            if (k < 0) continue;
            // Sign of the permutation: count inversions added by this choice.
            int inv = 0;
            for (int jj = j + 1; jj < l; ++jj) inv += used[jj];
            used[j] = true;
            chosen.push_back(k);
            rec(i + 1, inv % 2 ? -sign : sign);
            chosen.pop_back();
            used[j] = false;
        }
    };
    rec(0, 1);
    return SymFunc(b, std::move(acc));
}

}  // namespace

SymFunc jacobi_trudi(const Partition& lambda) { return determinant_expansion(Basis::h, lambda.parts()); }

SymFunc jacobi_trudi_dual(const Partition& lambda) {
    return determinant_expansion(Basis::e, conjugate(lambda).parts());
}

SymFunc omega(const SymFunc& f) {
    SymFunc p = convert(f, Basis::p);
    SymFunc::Terms out;
    for (const auto& [rho, c] : p.terms()) out.emplace(rho, (rho.weight() - rho.length()) % 2 ? -c : c);
    return convert(SymFunc(Basis::p, std::move(out)), f.basis());
}

Rational lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight()) return Rational(0);
    SymFunc prod = SymFunc::element(Basis::s, mu) * SymFunc::element(Basis::s, nu);
    return convert(prod, Basis::s).coefficient(lambda);
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu) {
    SymFunc out(Basis::s);
    if (!contains(lambda, mu)) return out;
    for (const auto& nu : enumerate_partitions(lambda.weight() - mu.weight()))
        out += SymFunc::element(Basis::s, nu, lr_coefficient(lambda, mu, nu));
    return out;
}

std::vector<SymFunc> series_FG(int sign, int D) {
    if (sign != 1 && sign != -1) throw UsageError("series_FG: sign must be +1 or -1");
    std::vector<SymFunc> out;
    for (int m = 0; m <= D; ++m) {
        std::vector<int> parts;
        if (m > 0) parts.push_back(m);
        if (sign > 0) out.push_back(SymFunc::element(Basis::h, Partition(parts)));
        else out.push_back(SymFunc::element(Basis::e, Partition(parts), Rational(m % 2 ? -1 : 1)));
    }
    return out;
}

SymFunc replicate(const SymFunc& f, const Rational& tau) {
    SymFunc p = convert(f, Basis::p);
    SymFunc::Terms out;
    for (const auto& [rho, c] : p.terms()) out.emplace(rho, c * tau.pow(rho.length()));
    return convert(SymFunc(Basis::p, std::move(out)), f.basis());
}

// ----------------------------------------------------------------- alphabets

Alphabet Alphabet::of_variables(const RingPtr& ring, const std::vector<std::string>& names) {
    Alphabet a(ring);
    for (const auto& n : names) a.letters_.emplace_back(Series::variable(ring, n), Rational(1));
    return a;
}

Alphabet Alphabet::letter(const RingPtr& ring, const Series& value, const Rational& weight) {
    Alphabet a(ring);
    a.letters_.emplace_back(value.lift(ring), weight);
    return a;
}

Alphabet Alphabet::replicated(const Rational& tau) const {
    Alphabet a = *this;
    for (auto& [v, w] : a.letters_) w *= tau;
    return a;
}

Alphabet Alphabet::operator+(const Alphabet& other) const {
    if (ring_ && other.ring_ && !(*ring_ == *other.ring_)) throw UsageError("alphabets over different rings");
    Alphabet a = *this;
    if (!a.ring_) a.ring_ = other.ring_;
    a.letters_.insert(a.letters_.end(), other.letters_.begin(), other.letters_.end());
    return a;
}

Series Alphabet::power_sum(int n) const {
    if (!ring_) return Series();
    Series s = Series::zero(ring_);
    for (const auto& [v, w] : letters_) s += v.pow(static_cast<long>(n)) * w;
    return s;
}

Series evaluate(const SymFunc& f, const Alphabet& x) {
    SymFunc p = convert(f, Basis::p);
    std::map<int, Series> ps;
    auto get = [&](int n) -> const Series& {
        auto it = ps.find(n);
        if (it == ps.end()) it = ps.emplace(n, x.power_sum(n)).first;
        return it->second;
    };
    Series out = x.ring() ? Series::zero(x.ring()) : Series();
    for (const auto& [rho, c] : p.terms()) {
        Series t(c);
        for (int part : rho.parts()) {
            t *= get(part);
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

CauchyReport cauchy_schur_check(int nx, int ny, int D, const Rational& q) {
    if (nx < 0 || ny < 0 || D < 0) throw UsageError("cauchy check: counts must be non-negative");
    std::vector<std::string> xs, ys, all;
    for (int i = 1; i <= nx; ++i) xs.push_back("x" + std::to_string(i));
    for (int j = 1; j <= ny; ++j) ys.push_back("y" + std::to_string(j));
    all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    auto ring = SeriesRing::make(all, 2 * D);
    Alphabet X = Alphabet::of_variables(ring, xs), Y = Alphabet::of_variables(ring, ys);
    Series lhs = Series::zero(ring), lhs_dual = Series::zero(ring);
    for (int n = 0; n <= D; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            Series sx = evaluate(SymFunc::element(Basis::s, lam), X);
            lhs += sx * evaluate(SymFunc::element(Basis::s, lam), Y);
            lhs_dual += sx * evaluate(SymFunc::element(Basis::s, conjugate(lam)), Y) * (-q).pow(n);
        }
    Series kernel = Series::constant(ring, 1), dual = Series::constant(ring, 1);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Series xy = Series::variable(ring, x) * Series::variable(ring, y);
            kernel *= (Series(1) - xy).inverse();
            dual *= Series(1) - xy * q;
        }
    CauchyReport rep;
    rep.kernel_ok = lhs == kernel;
    rep.dual_ok = lhs_dual == dual;
    rep.ok = rep.kernel_ok && rep.dual_ok;
    if (!rep.kernel_ok) rep.counterexample = "kernel: lhs - rhs = " + (lhs - kernel).str();
    else if (!rep.dual_ok) rep.counterexample = "dual: lhs - rhs = " + (lhs_dual - dual).str();
    return rep;
}

}  // namespace repsym
