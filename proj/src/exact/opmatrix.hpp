#pragma once

#include "exact/rational.hpp"

#include <string>
#include <vector>

namespace yso3 {

/// Dense square matrix over Rational. Dimension is fixed at construction;
/// all entries exact. Row-major storage.
class OpMatrix {
public:
    explicit OpMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static OpMatrix identity(int dim) {
        OpMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    /// Matrix unit e_{rc}.
    static OpMatrix unit(int dim, int r, int c) {
        OpMatrix m(dim);
        m.at(r, c) = Rational(1);
        return m;
    }

    int dim() const { return dim_; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    OpMatrix operator-() const;
    OpMatrix& operator+=(const OpMatrix& o);
    OpMatrix& operator-=(const OpMatrix& o);
    friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
    friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
    friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);
    friend OpMatrix operator*(const OpMatrix& a, const Rational& s);
    friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
        return a.dim_ == b.dim_ && a.a_ == b.a_;
    }
    friend bool operator!=(const OpMatrix& a, const OpMatrix& b) { return !(a == b); }

    Rational trace() const {
        Rational t;
        for (int i = 0; i < dim_; ++i) t += at(i, i);
        return t;
    }

    /// this += a * b, with a single reused scratch value.
    void add_product(const OpMatrix& a, const OpMatrix& b);
    /// this += b * s.
    void add_scaled(const OpMatrix& b, const Rational& s);

    static OpMatrix kron(const OpMatrix& a, const OpMatrix& b);

    std::string str() const;

private:
    int dim_;
    std::vector<Rational> a_;
};

inline OpMatrix zero_like(const OpMatrix& m) { return OpMatrix(m.dim()); }
inline OpMatrix one_like(const OpMatrix& m) { return OpMatrix::identity(m.dim()); }
inline bool is_zero(const OpMatrix& m) { return m.is_zero(); }
OpMatrix mul_scalar(const OpMatrix& m, const Rational& s);
inline void add_product_into(OpMatrix& acc, const OpMatrix& a, const OpMatrix& b) {
    acc.add_product(a, b);
}
inline void add_scaled_into(OpMatrix& acc, const OpMatrix& b, const Rational& s) {
    acc.add_scaled(b, s);
}
inline void add_into(OpMatrix& acc, const OpMatrix& b) { acc += b; }

} // namespace yso3
