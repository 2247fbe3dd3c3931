#pragma once

#include "gauss/gauss.hpp"

namespace yso3 {

/// Generating currents of the new realization: X^-(u) = e_{-1,0}(u),
/// X^+(u) = f_{0,-1}(u), H(u) = k_{-1}^{-1}(u) k_0(u).
struct Currents {
    OpSeries Xplus, Xminus, H;

    int dim() const { return H.exemplar().dim(); }
    int order() const { return H.valid_order(); }

    OpSeries* series_by_name(const std::string& name);
};

Currents currents_from_gauss(const GaussData& g);

/// Mode matrices: x^{+/-}_k is the u^{-k-1} coefficient of X^{+/-}(u),
/// h_k the u^{-k-1} coefficient of H(u) - 1. Valid for k <= order - 1.
struct Modes {
    std::vector<OpMatrix> xPlus, xMinus, h;
};

Modes extract_modes(const Currents& c);

/// The six current relations of the new realization, dual-path checked.
CheckOutcome check_current_relations(const Currents& c);

/// The five mode-relation families for every (k, l) with max(k, l) <= bound.
/// Errors (via exception) if a referenced mode is beyond validity.
CheckOutcome check_mode_relations(const Modes& m, int bound);

/// k_{-1}(u) H(u-1/2) = 1, i.e. k_{-1}(u) = H^{-1}(u-1/2).
CheckOutcome check_inverse_map(const GaussData& g, const Currents& c);

/// Surjectivity witness: rebuild all nine Gauss series from
/// {k_{-1}, e_{-1,0}, f_{0,-1}} alone and compare the reassembled T with the
/// original representation.
CheckOutcome check_generation_roundtrip(const RepT& t, const GaussData& g);

} // namespace yso3
