#pragma once

#include "exact/poly.hpp"

namespace yso3 {

/// Rational function num/den in canonical form: gcd(num, den) = 1, den monic
/// and nonzero. Zero is 0/1, so equality is componentwise.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Rational& constant) : num_(constant), den_(Rational(1)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Throws if x is a pole.
    Rational eval(const Rational& x) const;
    bool is_pole(const Rational& x) const { return den_.eval(x).is_zero(); }

    RatFunc compose_linear(const Rational& scale, const Rational& offset) const {
        return RatFunc(num_.compose_linear(scale, offset), den_.compose_linear(scale, offset));
    }

    std::string str(const char* var = "u") const;

private:
    void canonicalize();
    Poly num_, den_;
};

} // namespace yso3
