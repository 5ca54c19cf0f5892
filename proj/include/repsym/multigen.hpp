// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "repsym/series.hpp"

namespace repsym {

/// m components x1..xm, truncation D. With track_z the part-count variable z
/// is carried (zero weight, capped at D); otherwise z = 1.
struct MultiGenConfig {
    int m = 1;
    int D = 4;
    bool track_z = true;
};

enum class GenSign { F, G };

/// Ring of variables [z,] x1..xm for a configuration.
RingPtr multigen_ring(const MultiGenConfig& cfg);
/// Ring x1..xm with total-degree bound D.
RingPtr x_ring(int m, int D);

/// prod_{j=1}^m (1 - x_j^n)^{-1} over x_ring(m, D).
Series beta(int m, int n, int D);

/// Generating functions over non-zero multi-indices, from the exponential
/// form: F = exp(sum z^n/n (beta(n) - 1)), G = exp(-sum (-z)^n/n (beta(n) - 1)).
/// The coefficient of z^j x^k counts multipartitions of k into exactly j
/// parts (distinct parts for G).
Series expand_F(const MultiGenConfig& cfg);
Series expand_G(const MultiGenConfig& cfg);
/// Same series from the direct product over non-zero multi-indices.
Series expand_product(const MultiGenConfig& cfg, GenSign sign);

/// Y_j(0! beta(1), ..., (j-1)! beta(j)) / j!. Counts multipartitions with at
/// most j non-zero parts, i.e. the product including the zero index.
Series coefficient_P(int j, const MultiGenConfig& cfg);
/// Y_j(-0! beta(1), ...) / ((-1)^j j!).
Series coefficient_Q(int j, const MultiGenConfig& cfg);
/// Bell route with beta(n) - 1: exactly j parts, the z^j slice of expand_F/G.
Series coefficient_P_exact(int j, const MultiGenConfig& cfg);
Series coefficient_Q_exact(int j, const MultiGenConfig& cfg);

/// Coefficient of z^j of a series over multigen_ring, re-expressed over x_ring.
Series z_slice(const Series& s, int j, int m, int D);

/// F or G at x_l = q^l (l = 1..r), over the ring [z, q], via the exponential
/// form with prod_{l<=r} (1 - q^{l n})^{-1}.
Series specialize_to_q(int r, int D, GenSign sign);
/// The same by direct product over non-zero k with q^{sum_l l k_l}.
Series specialize_to_q_product(int r, int D, GenSign sign);
/// Sets z = 1 in a series over [z, q].
Series at_z_one(const Series& s);

struct HierarchyFactor {
    std::vector<int> k;  // (k_1, ..., k_r)
    Series factor;       // prod_{k_0} (1 - q^{|k| + k_0})^{-1}, zero exponent skipped
};

/// Factors Z_2 for every k with |k| <= D, over the ring [q] with bound D.
std::vector<HierarchyFactor> hierarchy_factorize(int r, int D);
/// prod_{n>=1} (1 - q^n)^{-C(n+r, r)}: the full product over (k_0, ..., k_r) != 0.
Series hierarchy_direct(int r, int D);

}  // namespace repsym
