#pragma once

#include "exact/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace yso3 {

/// Dense univariate polynomial over Rational. coeff(i) is the coefficient
/// of u^i; trailing zeros are trimmed so the leading coefficient of a
/// nonzero polynomial is nonzero. degree() of the zero polynomial is -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational();
    }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& s);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division (field coefficients): a = q*b + r, deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly monic() const;
    Rational eval(const Rational& x) const;

    /// p(scale*u + offset), exact.
    Poly compose_linear(const Rational& scale, const Rational& offset) const;

    std::string str(const char* var = "u") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace yso3
