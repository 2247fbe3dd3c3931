#pragma once

#include "exact/biseries.hpp"

#include <optional>
#include <vector>

namespace yso3 {

/// One summand of a two-variable identity side: scalar * series, optionally
/// divided by (u - v - pole). Identities are stored with their prefactors;
/// the two verification paths eliminate the poles differently.
struct BiTerm {
    std::optional<Rational> pole;
    Rational scalar = Rational(1);
    BiOpSeries series;
};

struct BiSides {
    std::vector<BiTerm> lhs, rhs;
};

struct PathOutcome {
    bool pass = true;
    bool vacuous = false;          // empty joint comparison window
    std::optional<BiMismatch> fail;
};

/// Both verification paths for one identity:
///   cleared   — multiply both sides by the product of the distinct pole
///               factors (u - v - c) and compare on the joint rectangle;
///   geometric — expand each 1/(u - v - c) as sum_k (v+c)^k u^{-k-1} and
///               compare on the joint staircase window.
struct BiVerdict {
    PathOutcome cleared, geometric;
    bool pass() const { return cleared.pass && !cleared.vacuous; }
    bool paths_agree() const { return cleared.pass == geometric.pass; }
};

BiVerdict verify_bi_identity(const BiSides& sides);

/// Convenience builders.
inline BiTerm plain(BiOpSeries s, Rational scalar = Rational(1)) {
    return BiTerm{std::nullopt, std::move(scalar), std::move(s)};
}
inline BiTerm over_pole(Rational pole, BiOpSeries s, Rational scalar = Rational(1)) {
    return BiTerm{std::move(pole), std::move(scalar), std::move(s)};
}

} // namespace yso3
