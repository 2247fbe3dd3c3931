#pragma once

#include "exact/bipoly.hpp"
#include "exact/opmatrix.hpp"
#include "exact/ratfunc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace yso3 {

/// Row/column labels for so_N matrices: (-n,...,-1,1,...,n) for N = 2n and
/// (-n,...,-1,0,1,...,n) for N = 2n+1, mapped to 0-based positions in the
/// listed (increasing) order.
struct SoIndexing {
    int N = 0;
    int n = 0;
    std::vector<int> labels;
    int pos(int label) const;
};

SoIndexing so_indexing(int N);

/// P, Q and the rational matrix R(u) = 1 - P/u + Q/(u - kappa) on C^N (x) C^N,
/// kappa = N/2 - 1. Kronecker convention: pair (a, b) has index a*N + b with
/// the left factor most significant.
struct RMatrixFamily {
    SoIndexing idx;
    Rational kappa;
    OpMatrix P, Q;
    std::vector<RatFunc> R;             // N^2 x N^2, row-major
    const RatFunc& r_entry(int row, int col) const { return R[static_cast<size_t>(row) * P.dim() + col]; }
    RatFunc& r_entry(int row, int col) { return R[static_cast<size_t>(row) * P.dim() + col]; }
};

/// The flip P(e_i (x) e_j) = e_j (x) e_i.
OpMatrix flip_operator(int N);

/// Q = P^t under (e_ij)^t = e_{-j,-i} in the first factor:
/// Q(e_j (x) e_{-j}) = sum_i e_i (x) e_{-i}, zero on e_j (x) e_k for k != -j.
OpMatrix q_operator(int N);

/// Partial transpose in the first tensor factor under (e_ij)^t = e_{-j,-i}.
OpMatrix partial_transpose_first(const OpMatrix& x, const SoIndexing& idx);

RMatrixFamily build_r_family(int N);

struct YbeFailure {
    int row = 0, col = 0;           // entry of the N^3 x N^3 comparison
    std::string monomial;           // first differing (u, v) monomial
    std::string lhs, rhs;
};

struct YbeResult {
    bool pass = true;
    std::optional<YbeFailure> failure;
};

/// R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v), checked as an exact
/// bivariate polynomial identity after clearing the common denominator
/// (u-v)(u-v-kappa) u(u-kappa) v(v-kappa).
YbeResult check_ybe(const RMatrixFamily& fam);

/// Independent oracle: evaluates both sides at sampled rational (u, v) pairs
/// away from all poles and compares the exact matrices.
YbeResult check_ybe_sampled(const RMatrixFamily& fam, std::uint64_t seed, int npoints);

struct StructureResult {
    bool pass = true;
    std::string detail;             // first failed law when !pass
};

/// P^2 = 1, Q^2 = N Q, PQ = QP = Q, Q = partial transpose of P, R(inf) = 1.
StructureResult check_structure(const RMatrixFamily& fam);

/// Entrywise check that R(u) R(-u) is a scalar multiple of the identity;
/// returns the scalar (reported, not asserted against any expected value).
struct CrossingScalar {
    bool scalar = true;
    RatFunc value;
};
CrossingScalar r_times_r_minus(const RMatrixFamily& fam);

} // namespace yso3
