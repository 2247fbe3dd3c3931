#pragma once

#include "exact/opmatrix.hpp"
#include "exact/ratfunc.hpp"
#include "exact/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace yso3 {

/// Truncated formal series sum_r c_r u^{-r} with coefficients in C (Rational
/// or OpMatrix). Exponents run over the window [lo, valid_order]: coefficients
/// below lo are exactly zero, coefficients above valid_order are unknown and
/// are never read. lo may be negative (positive powers of u).
///
/// Window rules:
///   a + b : [min(lo), min(valid)]
///   a * b : [lo_a + lo_b, min(valid_a + lo_b, valid_b + lo_a)]
///   a(u+c), invert(a), truncate : window preserved (truncate shrinks it)
template <class C>
class TruncSeries {
public:
    TruncSeries(int lo, int valid_order, const C& zero_exemplar)
        : lo_(lo), hi_(valid_order), c_(static_cast<size_t>(std::max(0, hi_ - lo_ + 1)), zero_exemplar) {
        if (hi_ < lo_) throw std::invalid_argument("TruncSeries: empty window");
    }

    static TruncSeries constant(const C& value, int valid_order) {
        TruncSeries s(0, valid_order, zero_like(value));
        s.set_coeff(0, value);
        return s;
    }
    static TruncSeries one(const C& exemplar, int valid_order) {
        return constant(one_like(exemplar), valid_order);
    }

    int lo() const { return lo_; }
    int valid_order() const { return hi_; }

    /// Coefficient of u^{-r}; exact zero below the window, error above it.
    C coeff(int r) const {
        if (r > hi_) throw std::out_of_range("TruncSeries: coefficient beyond valid order");
        if (r < lo_) return zero_like(c_.front());
        return c_[static_cast<size_t>(r - lo_)];
    }

    void set_coeff(int r, const C& v) {
        if (r < lo_ || r > hi_) throw std::out_of_range("TruncSeries: set outside window");
        c_[static_cast<size_t>(r - lo_)] = v;
    }

    /// In-window coefficient by reference (no zero-extension).
    const C& cref(int r) const {
        if (r < lo_ || r > hi_) throw std::out_of_range("TruncSeries: cref outside window");
        return c_[static_cast<size_t>(r - lo_)];
    }

    const C& exemplar() const { return c_.front(); }

    bool is_zero_through_valid() const {
        for (const auto& x : c_)
            if (!is_zero(x)) return false;
        return true;
    }

    TruncSeries truncated(int new_valid) const {
        if (new_valid > hi_) throw std::invalid_argument("TruncSeries: cannot extend validity");
        TruncSeries r(lo_, new_valid, zero_like(c_.front()));
        for (int k = lo_; k <= new_valid; ++k) r.set_coeff(k, coeff(k));
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int lo = std::min(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
        TruncSeries r(lo, hi, zero_like(a.c_.front()));
        for (int k = lo; k <= hi; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int lo = a.lo_ + b.lo_;
        int hi = std::min(a.hi_ + b.lo_, b.hi_ + a.lo_);
        if (hi < lo) throw std::invalid_argument("TruncSeries: product window empty");
        TruncSeries r(lo, hi, zero_like(a.c_.front() * b.c_.front()));
        for (int m = lo; m <= hi; ++m) {
            C acc = zero_like(r.c_.front());
            for (int i = std::max(a.lo_, m - b.hi_); i <= m - b.lo_; ++i) {
                const C& ai = a.c_[static_cast<size_t>(i - a.lo_)];
                if (is_zero(ai)) continue;
                add_product_into(acc, ai, b.c_[static_cast<size_t>(m - i - b.lo_)]);
            }
            r.set_coeff(m, acc);
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.c_ == b.c_;
    }

    TruncSeries scaled(const Rational& s) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = mul_scalar(x, s);
        return r;
    }

    /// a(u+c). Lower-triangular in the coefficients, so the window is
    /// preserved: [u^{-m}] a(u+c) = sum_{r<=m} a_r * binom(-r, m-r) * c^{m-r}.
    TruncSeries shifted(const Rational& c) const {
        if (c.is_zero()) return *this;
        TruncSeries r(lo_, hi_, zero_like(c_.front()));
        for (int m = lo_; m <= hi_; ++m) {
            C acc = zero_like(c_.front());
            for (int k = lo_; k <= m; ++k) {
                const C ak = coeff(k);
                if (is_zero(ak)) continue;
                Rational w = binomial(-k, m - k) * c.pow(m - k);
                if (!w.is_zero()) acc = acc + mul_scalar(ak, w);
            }
            r.set_coeff(m, acc);
        }
        return r;
    }

    /// Two-sided inverse up to the valid order. Requires lo == 0 and an
    /// identity constant coefficient (which holds for all k_i(u) and H(u)):
    /// b_0 = 1, b_m = -sum_{i=1..m} a_i b_{m-i}.
    TruncSeries inverted() const {
        if (lo_ != 0 || !(coeff(0) == one_like(c_.front())))
            throw std::domain_error("TruncSeries: inverse requires identity constant term");
        TruncSeries b(0, hi_, zero_like(c_.front()));
        b.set_coeff(0, one_like(c_.front()));
        for (int m = 1; m <= hi_; ++m) {
            C acc = zero_like(c_.front());
            for (int i = 1; i <= m; ++i) {
                const C ai = coeff(i);
                if (is_zero(ai)) continue;
                acc = acc + ai * b.coeff(m - i);
            }
            b.set_coeff(m, -acc);
        }
        return b;
    }

private:
    int lo_, hi_;
    std::vector<C> c_;
};

using RatSeries = TruncSeries<Rational>;
using OpSeries = TruncSeries<OpMatrix>;

/// Exact Laurent expansion of f at u = infinity, valid through order K.
/// Requires deg(num) <= deg(den) + 2 (positive-power window of 2).
RatSeries expand_at_infinity(const RatFunc& f, int K);

/// Lift a scalar series to operator coefficients c_r * I_dim.
OpSeries lift_scalar_series(const RatSeries& s, int dim);

/// Act on the left/right tensor factor: coefficients A -> A (x) I_m,
/// respectively A -> I_m (x) A.
OpSeries kron_with_identity(const OpSeries& s, int right_dim);
OpSeries identity_kron_with(int left_dim, const OpSeries& s);

struct SeriesMismatch {
    int exponent = 0;
    int row = 0, col = 0;
    std::string lhs, rhs;
};

/// Coefficientwise comparison over the joint window; reports the first
/// differing exponent (and matrix entry for operator coefficients).
std::optional<SeriesMismatch> series_mismatch(const OpSeries& a, const OpSeries& b);
std::optional<SeriesMismatch> series_mismatch(const RatSeries& a, const RatSeries& b);

} // namespace yso3
