// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "repsym/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "repsym/error.hpp"

namespace repsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw UsageError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::is_strict() const {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition Partition::operator+(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(all));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    // Reverse lexicographic: larger leading parts first.
    return b.parts_ <=> a.parts_;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw UsageError("enumerate_partitions needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long partition_count(int n) {
    std::vector<long> p(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    return n < 0 ? 0 : p[n];
}

Rational z_lambda(const Partition& lambda) {
    Rational z(1);
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int m = static_cast<int>(j - i);
        z *= Rational(parts[i]).pow(m) * factorial(m);
        i = j;
    }
    return z;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> c;
    if (!lambda.empty())
        for (int j = 1; j <= lambda[0]; ++j) {
            int count = 0;
            for (int p : lambda.parts()) count += p >= j;
            c.push_back(count);
        }
    return Partition(std::move(c));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return false;
    int a = 0, b = 0;
    std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

int hook_length(const Partition& lambda, int i, int j) {
    Partition c = conjugate(lambda);
    return lambda[i] - j + c[j] - i - 1;
}

MultiIndex::MultiIndex(std::vector<int> components) : c_(std::move(components)) {
    if (c_.empty()) throw UsageError("multi-index needs at least one component");
    for (int x : c_)
        if (x < 0) throw UsageError("multi-index components must be non-negative");
}

int MultiIndex::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ")";
    return os.str();
}

std::vector<Multipartition> enumerate_multipartitions(const MultiIndex& k, MultipartitionOptions opts) {
    if (k.is_zero()) throw UsageError("the all-zero multi-index has no multipartitions");
    // Candidate parts: every non-zero vector below k, in decreasing order.
    std::vector<MultiIndex> cands;
    std::vector<int> cur(k.size(), 0);
    std::function<void(int)> gen = [&](int i) {
        if (i == k.size()) {
            if (std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; })) cands.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= k[i]; ++v) {
            cur[i] = v;
            gen(i + 1);
        }
    };
    gen(0);
    std::sort(cands.begin(), cands.end(), std::greater<>());

    std::vector<Multipartition> out;
    Multipartition chosen;
    std::vector<int> rest = k.components();
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
            if (opts.parts < 0 || static_cast<int>(chosen.size()) == opts.parts) out.push_back(chosen);
            return;
        }
        if (opts.parts >= 0 && static_cast<int>(chosen.size()) >= opts.parts) return;
        for (std::size_t c = from; c < cands.size(); ++c) {
            const auto& v = cands[c];
            bool fits = true;
            for (int i = 0; i < k.size(); ++i) fits = fits && v[i] <= rest[i];
            if (!fits) continue;
            for (int i = 0; i < k.size(); ++i) rest[i] -= v[i];
            chosen.push_back(v);
            rec(opts.distinct ? c + 1 : c);
            chosen.pop_back();
            for (int i = 0; i < k.size(); ++i) rest[i] += v[i];
        }
    };
    rec(0);
    return out;
}

}  // namespace repsym
