#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace yso3 {

/// Exact rational scalar backed by GMP. Every value is kept canonical:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero is 0/1.
/// Equality is therefore bitwise on the (num, den) pair.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    /// Parses "p", "p/q", with optional sign on p ("-2/5", "+1", "0").
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpq_class& raw_mut() { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1 / q_);
    }

    /// Integer power; negative exponents invert first.
    Rational pow(long e) const;

    /// "p/q" (or "p" when q = 1); lossless.
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// binomial(top, k) for integer top of either sign:
/// top*(top-1)*...*(top-k+1) / k!.  Exact; binomial(n, k) = 0 for 0 <= n < k.
Rational binomial(long top, long k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational mul_scalar(const Rational& a, const Rational& s) { return a * s; }
inline void add_product_into(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void add_scaled_into(Rational& acc, const Rational& b, const Rational& s) { acc += b * s; }
inline void add_into(Rational& acc, const Rational& b) { acc += b; }

} // namespace yso3
