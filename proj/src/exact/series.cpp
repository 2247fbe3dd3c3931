#include "exact/series.hpp"

namespace yso3 {

RatSeries expand_at_infinity(const RatFunc& f, int K) {
    if (f.is_zero()) return RatSeries(0, K, Rational());
    int dn = f.num().degree(), dd = f.den().degree();
    int lo = dd - dn;
    if (lo < -2)
        throw std::domain_error("expand_at_infinity: pole order at infinity exceeds window");
    if (K < lo) throw std::invalid_argument("expand_at_infinity: order below leading exponent");

    // Reverse both polynomials into power series in x = 1/u and divide.
    auto rev = [](const Poly& p, int d) {
        std::vector<Rational> r(static_cast<size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) r[static_cast<size_t>(j)] = p.coeff(d - j);
        return r;
    };
    std::vector<Rational> N = rev(f.num(), dn), D = rev(f.den(), dd);
    int terms = K - lo + 1;
    std::vector<Rational> q(static_cast<size_t>(terms));
    Rational d0_inv = D[0].inverse();
    for (int m = 0; m < terms; ++m) {
        Rational acc = (m < static_cast<int>(N.size())) ? N[static_cast<size_t>(m)] : Rational();
        for (int i = 1; i <= m && i < static_cast<int>(D.size()); ++i)
            acc -= D[static_cast<size_t>(i)] * q[static_cast<size_t>(m - i)];
        q[static_cast<size_t>(m)] = acc * d0_inv;
    }
    RatSeries s(lo, K, Rational());
    for (int r = lo; r <= K; ++r) s.set_coeff(r, q[static_cast<size_t>(r - lo)]);
    return s;
}

OpSeries lift_scalar_series(const RatSeries& s, int dim) {
    OpSeries r(s.lo(), s.valid_order(), OpMatrix(dim));
    OpMatrix id = OpMatrix::identity(dim);
    for (int k = s.lo(); k <= s.valid_order(); ++k) r.set_coeff(k, id * s.coeff(k));
    return r;
}

OpSeries kron_with_identity(const OpSeries& s, int right_dim) {
    OpMatrix id = OpMatrix::identity(right_dim);
    OpSeries r(s.lo(), s.valid_order(), OpMatrix(s.exemplar().dim() * right_dim));
    for (int k = s.lo(); k <= s.valid_order(); ++k)
        r.set_coeff(k, OpMatrix::kron(s.coeff(k), id));
    return r;
}

OpSeries identity_kron_with(int left_dim, const OpSeries& s) {
    OpMatrix id = OpMatrix::identity(left_dim);
    OpSeries r(s.lo(), s.valid_order(), OpMatrix(left_dim * s.exemplar().dim()));
    for (int k = s.lo(); k <= s.valid_order(); ++k)
        r.set_coeff(k, OpMatrix::kron(id, s.coeff(k)));
    return r;
}

std::optional<SeriesMismatch> series_mismatch(const OpSeries& a, const OpSeries& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi = std::min(a.valid_order(), b.valid_order());
    for (int r = lo; r <= hi; ++r) {
        OpMatrix ca = a.coeff(r), cb = b.coeff(r);
        if (ca == cb) continue;
        for (int i = 0; i < ca.dim(); ++i)
            for (int j = 0; j < ca.dim(); ++j)
                if (ca.at(i, j) != cb.at(i, j))
                    return SeriesMismatch{r, i, j, ca.at(i, j).str(), cb.at(i, j).str()};
    }
    return std::nullopt;
}

std::optional<SeriesMismatch> series_mismatch(const RatSeries& a, const RatSeries& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi = std::min(a.valid_order(), b.valid_order());
    for (int r = lo; r <= hi; ++r) {
        Rational ca = a.coeff(r), cb = b.coeff(r);
        if (ca != cb) return SeriesMismatch{r, 0, 0, ca.str(), cb.str()};
    }
    return std::nullopt;
}

} // namespace yso3
