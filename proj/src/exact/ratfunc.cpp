#include "exact/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace yso3 {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Rational lead_inv = den_.leading().inverse();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::str(const char* var) const {
    if (den_ == Poly(Rational(1))) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    return os.str();
}

} // namespace yso3
