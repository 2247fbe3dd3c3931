#include "exact/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace yso3 {

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s.is_zero()) return Poly();
    Poly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = a;
    std::vector<Rational> q;
    int db = b.degree();
    if (rem.degree() >= db) q.assign(rem.degree() - db + 1, Rational());
    Rational lead_inv = b.leading().inverse();
    while (rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        std::vector<Rational> sub(shift + db + 1);
        for (int i = 0; i <= db; ++i) sub[shift + i] = b.coeff(i) * f;
        rem = rem - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose_linear(const Rational& scale, const Rational& offset) const {
    Poly lin(std::vector<Rational>{offset, scale});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeff(i);
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

} // namespace yso3
