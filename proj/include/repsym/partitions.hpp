// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "repsym/rational.hpp"

namespace repsym {

/// Weakly decreasing list of positive parts.
///
/// Partitions compare by weight first and then reverse-lexicographically,
/// so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) < (5) < ...
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws UsageError on non-positive parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    /// Part i (0-based), or 0 beyond the length.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int multiplicity(int part) const;
    bool is_strict() const;

    /// Union of parts.
    Partition operator+(const Partition& other) const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);
/// Number of partitions of n (by a separate recursion; used for sizing).
long partition_count(int n);

Rational z_lambda(const Partition& lambda);
Partition conjugate(const Partition& lambda);
/// lambda >= mu in dominance order (equal weights required, otherwise false).
bool dominates(const Partition& lambda, const Partition& mu);
/// Young-diagram containment mu ⊆ lambda.
bool contains(const Partition& lambda, const Partition& mu);
/// Hook length of cell (i, j), 0-based.
int hook_length(const Partition& lambda, int i, int j);

/// Component vector of a multipartite number.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> components);
    MultiIndex(std::initializer_list<int> components) : MultiIndex(std::vector<int>(components)) {}

    const std::vector<int>& components() const { return c_; }
    int size() const { return static_cast<int>(c_.size()); }
    int operator[](std::size_t i) const { return c_[i]; }
    int total() const;
    bool is_zero() const { return total() == 0; }
    std::string str() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> c_;
};

struct MultipartitionOptions {
    /// Exact number of parts, or -1 for any.
    int parts = -1;
    /// Parts must be pairwise distinct.
    bool distinct = false;
};

using Multipartition = std::vector<MultiIndex>;

/// Multisets of non-zero multi-indices summing to k, each listed in
/// non-increasing order. Throws UsageError on the all-zero k.
std::vector<Multipartition> enumerate_multipartitions(const MultiIndex& k, MultipartitionOptions opts = {});

}  // namespace repsym
