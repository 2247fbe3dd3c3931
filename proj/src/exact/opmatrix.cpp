#include "exact/opmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace yso3 {

OpMatrix OpMatrix::operator-() const {
    OpMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("OpMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("OpMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("OpMatrix: dimension mismatch");
    int n = a.dim_;
    OpMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

OpMatrix operator*(const OpMatrix& a, const Rational& s) {
    OpMatrix r = a;
    for (auto& x : r.a_) x *= s;
    return r;
}

void OpMatrix::add_product(const OpMatrix& a, const OpMatrix& b) {
    if (dim_ != a.dim_ || dim_ != b.dim_)
        throw std::invalid_argument("OpMatrix: dimension mismatch");
    mpq_t t;
    mpq_init(t);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                mpq_mul(t, aik.raw().get_mpq_t(), bkj.raw().get_mpq_t());
                mpq_class& acc = at(i, j).raw_mut();
                mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t);
            }
        }
    mpq_clear(t);
}

void OpMatrix::add_scaled(const OpMatrix& b, const Rational& s) {
    if (dim_ != b.dim_) throw std::invalid_argument("OpMatrix: dimension mismatch");
    if (s.is_zero()) return;
    mpq_t t;
    mpq_init(t);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (b.a_[i].is_zero()) continue;
        mpq_mul(t, b.a_[i].raw().get_mpq_t(), s.raw().get_mpq_t());
        mpq_class& acc = a_[i].raw_mut();
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t);
    }
    mpq_clear(t);
}

OpMatrix OpMatrix::kron(const OpMatrix& a, const OpMatrix& b) {
    int n = a.dim_, m = b.dim_;
    OpMatrix r(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (!b.at(k, l).is_zero()) r.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

std::string OpMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < dim_; ++j) {
            if (j) os << ",";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

OpMatrix mul_scalar(const OpMatrix& m, const Rational& s) { return m * s; }

} // namespace yso3
