#pragma once

#include "exact/series.hpp"
#include "rmatrix/rmatrix.hpp"
#include "verify/outcome.hpp"

#include <vector>

namespace yso3 {

/// Evaluation points and truncation order of a concrete representation;
/// the representation space has dimension 3^(number of points).
struct EvalParams {
    std::vector<Rational> points;
    int order = 8;
};

/// The 3x3 generating matrix of operator-valued truncated series. Row and
/// column labels run over {-1, 0, 1}; entries act on C^dim.
class RepT {
public:
    RepT(int dim, int order)
        : dim_(dim), order_(order),
          e_(9, OpSeries(0, order, OpMatrix(dim))) {}

    int dim() const { return dim_; }
    int order() const { return order_; }

    static int pos(int label) { return label + 1; }

    const OpSeries& at(int i, int j) const { return e_[static_cast<size_t>(pos(i)) * 3 + pos(j)]; }
    OpSeries& at(int i, int j) { return e_[static_cast<size_t>(pos(i)) * 3 + pos(j)]; }

    /// t^{(0)}_{ij} = delta_ij * I.
    bool has_unit_constant_term() const;

private:
    int dim_, order_;
    std::vector<OpSeries> e_;
};

/// Inverse generating matrix; entries are the series t'_{ij}(u).
using RepTInv = RepT;

/// Unnormalized evaluation representation: rho(t_ij(u))_{kl} = R(u-a)_{(i,k),(j,l)},
/// expanded at infinity through order K. Satisfies the exchange relation but
/// not the unitarity relation.
RepT eval_rep_raw(const Rational& a, int K);

/// The scalar g(u) with T_raw(u) T_raw^t(u+1/2) = g(u) * 1; entrywise
/// scalarity is asserted (throws std::domain_error("not scalar") otherwise).
RatSeries unitarity_scalar(const RepT& raw);

/// The unique series c with c(u) c(u+1/2) g(u) = 1 and c_0 = 1, computed by
/// the triangular coefficient recursion.
RatSeries normalize_scalar(const Rational& a, int K);

/// Normalized representation; for several points, the coproduct tensor of
/// the single-point representations (leftmost point on the leftmost factor).
RepT build_rep(const EvalParams& params);

/// c(u) * T entrywise, the scalar series lifted to operator coefficients.
RepT scale_rep(const RepT& t, const RatSeries& c);

/// Coproduct tensor of two representations (left argument on the left factor).
RepT tensor_rep(const RepT& a, const RepT& b);

/// (T^t(u+shift))_{ij} = t_{-j,-i}(u+shift).
RepT transpose_rep(const RepT& t, const Rational& shift);

/// Series inverse of the full generating matrix on aux (x) rep space
/// (auxiliary index most significant).
RepTInv invert_rep(const RepT& t);

/// R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v), dual-path checked per entry of
/// aux1 (x) aux2 with clearing polynomial (u-v)(u-v-1/2).
CheckOutcome check_rtt(const RepT& t);

/// T(u) T^t(u+1/2) = T^t(u+1/2) T(u) = 1.
CheckOutcome check_unitarity(const RepT& t);

/// The 81 entrywise generating relations equivalent to the exchange relation.
CheckOutcome check_gen_rel_t(const RepT& t);

/// The matrix identity T2^{-1}(v) R(u-v) T1(u) = T1(u) R(u-v) T2^{-1}(v).
CheckOutcome check_rtt_inverse_form(const RepT& t, const RepTInv& tinv);

/// The 81 entrywise relations between t_{pq}(u) and t'_{rs}(v).
CheckOutcome check_gen_rel_tprime(const RepT& t, const RepTInv& tinv);

} // namespace yso3
