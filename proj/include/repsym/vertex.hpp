// Copyright 2026 The repsym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "repsym/deformed.hpp"
#include "repsym/symfunc.hpp"

namespace repsym {

/// Boson Fock space states are symmetric functions in the p basis.
using FockState = SymFunc;

/// alpha_{-n}: multiplication by p_n, dropping weight above D (D < 0: no cut).
FockState creation(int n, const FockState& state, int D = -1);
/// alpha_n = n d/dp_n.
FockState annihilation(int n, const FockState& state);
/// n xi_n d/dp_n, the adjoint of p_n under the deformed product.
FockState deformed_adjoint(int n, const DeformationParams& params, const FockState& state);

/// V_alpha(z) state = exp(alpha sum z^k p_k / k) exp(-alpha sum z^{-k} d/dp_k) state,
/// keyed by the power of z, symmetric-function weight <= D.
std::map<int, FockState> vertex_simple(const Rational& alpha, const FockState& state, int D);
/// prod over cells (alpha + j - i) / hook(i, j).
Rational dim_sigma(const Partition& sigma, const Rational& alpha);

/// Insertion points z_i with weights tau_i and w_j with weights eta_j over a
/// common ring, plus the deformation.
struct VertexSpec {
    RingPtr ring;
    std::vector<std::string> z_names, w_names;
    std::vector<Rational> tau, eta;
    DeformationParams xi = DeformationParams::schur();

    /// z, w of unit weight, total degree <= bound.
    static VertexSpec graded(std::vector<Rational> tau, std::vector<Rational> eta, DeformationParams xi, int bound);
    /// Formal variables of unit weight truncated at D; z, w of weight zero capped at D.
    static VertexSpec weighted(std::vector<Rational> tau, std::vector<Rational> eta, DeformationParams xi,
                               std::vector<std::string> formal, int D);

    /// p_n = sum tau_i z_i^n.
    Alphabet creation_alphabet() const;
    /// p_n = sum eta_j w_j^n.
    Alphabet annihilation_alphabet() const;
};

struct MatrixElement {
    Series value;       // the common value when consistent
    Series direct;      // <P_mu, V Q_nu> by applying V
    Series via_skew;    // sum_zeta P_{mu/zeta}(Z) Q_{nu/zeta}(W)
    bool consistent = false;
};

MatrixElement vertex_matrix_element(const Partition& mu, const Partition& nu, const VertexSpec& spec);

/// S_{p/r} = sum_{|mu| <= D} sum_nu p^{|mu|} r^{|nu|} P_{mu/nu}(Z) Q_{mu/nu}(W).
Series vertex_trace(const VertexSpec& spec, const Series& p, const Series& r, int D);
/// A_{lambda mu} = sum_{|zeta| <= D} p^{|zeta|} P_{zeta/lambda}(Z) Q_{zeta/mu}(W).
Series vertex_A(const Partition& lambda, const Partition& mu, const VertexSpec& spec, const Series& p, int D);
/// J_p prod-form companion: J_p sum_sigma p^{|lambda|+|mu|-|sigma|} P_{mu/sigma}(Z) Q_{lambda/sigma}(W).
Series vertex_A_closed(const Partition& lambda, const Partition& mu, const VertexSpec& spec, const Series& p, int D);
/// exp(sum_n p^n p_n(Z) p_n(W) / (n xi_n)).
Series trace_kernel(const VertexSpec& spec, const Series& p, int D);

/// Two readings of S_{p/r} = J_p S_{rp^2/p^{-1}} with formal p: the first
/// slot taking r p^2 and the second p^{-1}, or the slots (p, r p^2).
struct TraceReadings {
    bool first_slot_rp2 = false;
    bool second_slot_rp2 = false;
    Series lhs;
};
TraceReadings trace_functional_readings(const VertexSpec& spec, const Series& p, const Rational& r, int D);

struct HLTraceReport {
    bool ok = false;
    /// Lowest power of q where the two sides differ, -1 when they agree.
    int first_mismatch = -1;
    Series lhs, rhs;
};

/// sum_{mu nu} q^{|mu|} P_{mu/nu}(X^(a) + Y^(b); q) Q_{mu/nu}(W^(t) + Z^(e); q)
/// against prod (1-q^n)^{-1} prod (1 - q x w)^{-a t} (1 - q x z)^{-a e}
/// (1 - q y w)^{-b t} (1 - q y z)^{-b e}, with the Hall-Littlewood parameter
/// equal to the formal q, to q-degree D.
HLTraceReport hl_trace_identity_check(const Rational& a, const Rational& b, const Rational& t, const Rational& e,
                                      int nx, int ny, int nw, int nz, int D);

}  // namespace repsym
