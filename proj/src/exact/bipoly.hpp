#pragma once

#include "exact/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace yso3 {

/// Sparse bivariate polynomial in (u, v) over Rational. Keys are monomial
/// degree pairs; zero coefficients are never stored.
class BiPoly {
public:
    BiPoly() = default;
    static BiPoly constant(const Rational& c) {
        BiPoly p;
        p.add_term(0, 0, c);
        return p;
    }
    static BiPoly monomial(int du, int dv, const Rational& c) {
        BiPoly p;
        p.add_term(du, dv, c);
        return p;
    }
    /// u - v - c.
    static BiPoly u_minus_v_minus(const Rational& c);

    void add_term(int du, int dv, const Rational& c);
    Rational coeff(int du, int dv) const;
    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }

    BiPoly operator-() const;
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Rational& s);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    Rational eval(const Rational& u, const Rational& v) const;
    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> t_;
};

} // namespace yso3
