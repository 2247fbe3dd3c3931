#pragma once

#include "exact/bipoly.hpp"
#include "exact/series.hpp"

#include <optional>

namespace yso3 {

struct BiMismatch {
    int r = 0, s = 0;
    int row = 0, col = 0;
    std::string lhs, rhs;
};

/// Truncated series sum_{r,s} c_{r,s} u^{-r} v^{-s}. Validity is a rectangle
/// [loU, hiU] x [loV, hiV] optionally cut by the diagonal bound r + s <= diag
/// (the window the geometric expansion of 1/(u-v-c) produces). Coefficients
/// below loU/loV are exactly zero; coefficients outside the valid region are
/// unknown and never read.
template <class C>
class BiSeries {
public:
    static constexpr long long kNoDiag = (1LL << 40);

    BiSeries(int loU, int hiU, int loV, int hiV, const C& zero_exemplar, long long diag = kNoDiag)
        : loU_(loU), hiU_(hiU), loV_(loV), hiV_(hiV), diag_(diag),
          c_(static_cast<size_t>(std::max(0, hiU - loU + 1)) *
                 static_cast<size_t>(std::max(0, hiV - loV + 1)),
             zero_exemplar) {
        if (hiU_ < loU_ || hiV_ < loV_) throw std::invalid_argument("BiSeries: empty window");
    }

    int loU() const { return loU_; }
    int hiU() const { return hiU_; }
    int loV() const { return loV_; }
    int hiV() const { return hiV_; }
    long long diag() const { return diag_; }
    const C& exemplar() const { return c_.front(); }

    bool valid_at(int r, int s) const {
        return r <= hiU_ && s <= hiV_ && static_cast<long long>(r) + s <= diag_;
    }

    C coeff(int r, int s) const {
        if (!valid_at(r, s)) throw std::out_of_range("BiSeries: coefficient beyond validity");
        if (r < loU_ || s < loV_) return zero_like(c_.front());
        return c_[idx(r, s)];
    }

    void set_coeff(int r, int s, const C& v) {
        if (r < loU_ || r > hiU_ || s < loV_ || s > hiV_)
            throw std::out_of_range("BiSeries: set outside window");
        c_[idx(r, s)] = v;
    }

    BiSeries operator-() const {
        BiSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    BiSeries scaled(const Rational& sc) const {
        BiSeries r(loU_, hiU_, loV_, hiV_, zero_like(c_.front()), diag_);
        for (size_t i = 0; i < c_.size(); ++i) add_scaled_into(r.c_[i], c_[i], sc);
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        BiSeries r(std::min(a.loU_, b.loU_), std::min(a.hiU_, b.hiU_),
                   std::min(a.loV_, b.loV_), std::min(a.hiV_, b.hiV_),
                   zero_like(a.c_.front()), std::min(a.diag_, b.diag_));
        for (int i = r.loU_; i <= r.hiU_; ++i)
            for (int j = r.loV_; j <= r.hiV_; ++j) {
                if (static_cast<long long>(i) + j > r.diag_) continue;
                C& out = r.c_[r.idx(i, j)];
                if (const C* pa = a.cptr(i, j)) out = *pa;
                if (const C* pb = b.cptr(i, j)) add_into(out, *pb);
            }
        return r;
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

    /// Multiply by the monomial u^du v^dv (du, dv >= 0).
    BiSeries mul_monomial(int du, int dv) const {
        return mul_poly(BiPoly::monomial(du, dv, Rational(1)));
    }

    /// Multiply by a bivariate polynomial; the valid window shrinks by the
    /// monomial degrees, intersected over the monomials present.
    BiSeries mul_poly(const BiPoly& p) const {
        if (p.is_zero()) throw std::invalid_argument("BiSeries: multiplication by zero polynomial");
        int maxU = 0, maxV = 0;
        long long maxUV = 0;
        for (const auto& [k, c] : p.terms()) {
            maxU = std::max(maxU, k.first);
            maxV = std::max(maxV, k.second);
            maxUV = std::max(maxUV, static_cast<long long>(k.first) + k.second);
        }
        BiSeries r(loU_ - maxU, hiU_ - maxU, loV_ - maxV, hiV_ - maxV, zero_like(c_.front()),
                   diag_ == kNoDiag ? kNoDiag : diag_ - maxUV);
        for (int i = r.loU_; i <= r.hiU_; ++i)
            for (int j = r.loV_; j <= r.hiV_; ++j) {
                if (static_cast<long long>(i) + j > r.diag_) continue;
                C& out = r.c_[r.idx(i, j)];
                for (const auto& [k, c] : p.terms())
                    if (const C* src = cptr(i + k.first, j + k.second))
                        add_scaled_into(out, *src, c);
            }
        return r;
    }

    /// A(u) * B(v): coefficient (r, s) = A_r * B_s (operator order preserved).
    static BiSeries outer_uv(const TruncSeries<C>& a, const TruncSeries<C>& b) {
        BiSeries r(a.lo(), a.valid_order(), b.lo(), b.valid_order(),
                   zero_like(a.exemplar() * b.exemplar()));
        for (int i = a.lo(); i <= a.valid_order(); ++i) {
            const C& ai = a.cref(i);
            if (is_zero(ai)) continue;
            for (int j = b.lo(); j <= b.valid_order(); ++j) {
                const C& bj = b.cref(j);
                if (is_zero(bj)) continue;
                add_product_into(r.c_[r.idx(i, j)], ai, bj);
            }
        }
        return r;
    }

    /// B(v) * A(u): coefficient (r, s) = B_s * A_r.
    static BiSeries outer_vu(const TruncSeries<C>& b, const TruncSeries<C>& a) {
        BiSeries r(a.lo(), a.valid_order(), b.lo(), b.valid_order(),
                   zero_like(b.exemplar() * a.exemplar()));
        for (int j = b.lo(); j <= b.valid_order(); ++j) {
            const C& bj = b.cref(j);
            if (is_zero(bj)) continue;
            for (int i = a.lo(); i <= a.valid_order(); ++i) {
                const C& ai = a.cref(i);
                if (is_zero(ai)) continue;
                add_product_into(r.c_[r.idx(i, j)], bj, ai);
            }
        }
        return r;
    }

    /// Embed a series in u alone; exact (hence valid to any order) in v.
    static BiSeries embed_u(const TruncSeries<C>& a, int hiV) {
        BiSeries r(a.lo(), a.valid_order(), 0, hiV, zero_like(a.exemplar()));
        for (int i = a.lo(); i <= a.valid_order(); ++i) r.set_coeff(i, 0, a.coeff(i));
        return r;
    }

    static BiSeries embed_v(const TruncSeries<C>& b, int hiU) {
        BiSeries r(0, hiU, b.lo(), b.valid_order(), zero_like(b.exemplar()));
        for (int j = b.lo(); j <= b.valid_order(); ++j) r.set_coeff(0, j, b.coeff(j));
        return r;
    }

    /// (sum_{k>=0} (v+c)^k u^{-k-1}) * B — the geometric expansion of
    /// 1/(u-v-c) times B. Validity becomes the staircase
    /// r + s <= min(B.diag + 1, B.hiV + B.loU + 1), r <= B.hiU + 1.
    /// Computed through the exact recurrence (u - v - c) R = B:
    /// R(m+1, n) = B(m, n) + R(m, n+1) + c R(m, n), with R = 0 below loU + 1.
    static BiSeries geometric_pole_product(const Rational& c, const BiSeries& b) {
        int loU = b.loU_ + 1, hiU = b.hiU_ + 1;
        int loV = b.loV_ - (b.hiU_ - b.loU_), hiV = b.hiV_;
        long long diag = std::min(b.diag_ == kNoDiag ? kNoDiag : b.diag_ + 1,
                                  static_cast<long long>(b.hiV_) + b.loU_ + 1);
        BiSeries r(loU, hiU, loV, hiV, zero_like(b.c_.front()), diag);
        for (int m = loU; m <= hiU; ++m)
            for (int n = hiV; n >= loV; --n) {
                if (static_cast<long long>(m) + n > diag) continue;
                C acc = (m - 1 >= b.loU_ && n >= b.loV_ && n <= b.hiV_)
                            ? b.c_[b.idx(m - 1, n)]
                            : zero_like(b.c_.front());
                if (m - 1 >= loU) {
                    if (n + 1 <= hiV) acc = acc + r.c_[r.idx(m - 1, n + 1)];
                    if (!c.is_zero()) add_scaled_into(acc, r.c_[r.idx(m - 1, n)], c);
                }
                r.set_coeff(m, n, acc);
            }
        return r;
    }

    /// First differing coefficient over the joint valid region, scanned in
    /// lexicographic (r, s) order. compared_out, when given, receives the
    /// number of coefficient pairs inspected.
    static std::optional<BiMismatch> mismatch(const BiSeries& a, const BiSeries& b,
                                              long* compared_out = nullptr) {
        int loU = std::min(a.loU_, b.loU_), hiU = std::min(a.hiU_, b.hiU_);
        int loV = std::min(a.loV_, b.loV_), hiV = std::min(a.hiV_, b.hiV_);
        long long diag = std::min(a.diag_, b.diag_);
        long compared = 0;
        std::optional<BiMismatch> found;
        for (int r = loU; r <= hiU && !found; ++r)
            for (int s = loV; s <= hiV && !found; ++s) {
                if (static_cast<long long>(r) + s > diag) continue;
                ++compared;
                C ca = a.coeff(r, s), cb = b.coeff(r, s);
                if (ca == cb) continue;
                found = first_entry_diff(r, s, ca, cb);
            }
        if (compared_out) *compared_out = compared;
        return found;
    }

private:
    static BiMismatch first_entry_diff(int r, int s, const OpMatrix& ca, const OpMatrix& cb) {
        for (int i = 0; i < ca.dim(); ++i)
            for (int j = 0; j < ca.dim(); ++j)
                if (ca.at(i, j) != cb.at(i, j))
                    return BiMismatch{r, s, i, j, ca.at(i, j).str(), cb.at(i, j).str()};
        return BiMismatch{r, s, 0, 0, "?", "?"};
    }
    static BiMismatch first_entry_diff(int r, int s, const Rational& ca, const Rational& cb) {
        return BiMismatch{r, s, 0, 0, ca.str(), cb.str()};
    }

    size_t idx(int r, int s) const {
        return static_cast<size_t>(r - loU_) * static_cast<size_t>(hiV_ - loV_ + 1) +
               static_cast<size_t>(s - loV_);
    }

    /// In-window pointer; nullptr for exact zeros below the lows. Callers
    /// guarantee (r, s) is within the valid region otherwise.
    const C* cptr(int r, int s) const {
        if (r < loU_ || s < loV_) return nullptr;
        if (r > hiU_ || s > hiV_) throw std::out_of_range("BiSeries: read beyond validity");
        return &c_[idx(r, s)];
    }

    int loU_, hiU_, loV_, hiV_;
    long long diag_;
    std::vector<C> c_;
};

using BiOpSeries = BiSeries<OpMatrix>;
using BiRatSeries = BiSeries<Rational>;

} // namespace yso3
