#pragma once

#include "rep/rep.hpp"

namespace yso3 {

/// The nine Gauss generators of T(u) = F(u) K(u) E(u): unitriangular
/// factors F (lower) and E (upper) around the diagonal K. Each k leads with
/// the identity, each e and f with zero.
struct GaussData {
    OpSeries kMinus1, k0, k1;   // k_{-1}, k_0, k_1
    OpSeries eM10, e01, eM11;   // e_{-1,0}, e_{01}, e_{-1,1}
    OpSeries f0M1, f10, f1M1;   // f_{0,-1}, f_{10}, f_{1,-1}

    int dim() const { return kMinus1.exemplar().dim(); }
    int order() const { return kMinus1.valid_order(); }

    /// Named access for mutation mode: kMinus1, k0, k1, eM10, e01, eM11,
    /// f0M1, f10, f1M1. Null for unknown names.
    OpSeries* series_by_name(const std::string& name);
};

/// Block elimination in lower-left-first order; requires unit constant
/// coefficients on t_{-1,-1} and the derived k_0 (true for representations
/// built by the rep module).
GaussData gauss_decompose(const RepT& t);

/// Reassemble F * K * E.
RepT gauss_reconstruct(const GaussData& g);

/// Reconstruction reproduces the input, and decompose(reconstruct(G)) = G.
CheckOutcome check_gauss_roundtrip(const RepT& t, const GaussData& g);

/// The four consequences of the unitarity relation for Gauss generators,
/// individually and as a bundle.
CheckOutcome check_k1_inverse_shift(const GaussData& g);
CheckOutcome check_e01_from_unitarity(const GaussData& g);
CheckOutcome check_f10_from_unitarity(const GaussData& g);
CheckOutcome check_k0_inverse_cross(const GaussData& g);
CheckOutcome check_unitarity_consequences(const GaussData& g);

/// [k,k)-type commutation family: [k_{-1}(u),k_{-1}(v)] = 0,
/// [k_{-1}(u),k_0(v)] = 0, and the k-e / k-f exchange identities.
CheckOutcome check_k_family(const GaussData& g);

/// [e_{-1,0}(u), f_{0,-1}(v)] = (H(u) - H(v))/(u-v), H = k_{-1}^{-1} k_0.
CheckOutcome check_ef_commutator(const GaussData& g);

/// e_{01}(u) = -e_{-1,0}(u-1/2) and f_{10}(u) = -f_{0,-1}(u-1/2).
CheckOutcome check_ef_reflection(const GaussData& g);

/// k_0(u) = k_{-1}(u) k_{-1}^{-1}(u+1/2), plus the derived form
/// k_{-1}^{-1}(u) k_0(u) = k_{-1}^{-1}(u+1/2).
CheckOutcome check_k0_factorization(const GaussData& g);

/// Anticommutator identities for H against e_{-1,0} and f_{0,-1}.
CheckOutcome check_h_anticommutators(const GaussData& g);

/// Quadratic exchange: 2(u-v)[e(u),e(v)] = (e(u)-e(v))^2 and the f-version
/// with the opposite sign.
CheckOutcome check_quadratic_exchange(const GaussData& g);

/// The five one-variable consequences: the shift combination for e_{-1,1},
/// its first-mode commutator forms, and the half-square laws for e_{-1,1}
/// and f_{1,-1}.
CheckOutcome check_em11_shift_combination(const GaussData& g);
CheckOutcome check_em11_from_first_mode(const GaussData& g);
CheckOutcome check_first_mode_shift(const GaussData& g);
CheckOutcome check_em11_half_square(const GaussData& g);
CheckOutcome check_f1m1_half_square(const GaussData& g);
CheckOutcome check_em11_f1m1_laws(const GaussData& g);

/// k_0(u) k_{-1}(u+1/2) = k_{-1}(u) — consistency of the factorization with
/// the unitarity consequences.
CheckOutcome check_k_consistency_triangle(const GaussData& g);

} // namespace yso3
