#include "exact/bipoly.hpp"

#include <sstream>

namespace yso3 {

BiPoly BiPoly::u_minus_v_minus(const Rational& c) {
    BiPoly p;
    p.add_term(1, 0, Rational(1));
    p.add_term(0, 1, Rational(-1));
    p.add_term(0, 0, -c);
    return p;
}

void BiPoly::add_term(int du, int dv, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(du, dv);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational BiPoly::coeff(int du, int dv) const {
    auto it = t_.find(std::make_pair(du, dv));
    return it == t_.end() ? Rational() : it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly operator*(const BiPoly& a, const Rational& s) {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.t_) r.t_.emplace(k, c * s);
    return r;
}

Rational BiPoly::eval(const Rational& u, const Rational& v) const {
    Rational acc;
    for (const auto& [k, c] : t_) acc += c * u.pow(k.first) * v.pow(k.second);
    return acc;
}

std::string BiPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (k.first) os << "*u" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second) os << "*v" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

} // namespace yso3
