#include "exact/rational.hpp"

#include <cctype>
#include <ostream>

namespace yso3 {

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(s.begin());
    if (s.empty()) throw std::invalid_argument("Rational: empty string");

    // mpq set_str accepts junk like "1/0" and partial parses; validate first.
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits(s)) throw std::invalid_argument("Rational: bad literal '" + text + "'");
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!digits(num) || !digits(den) || den[0] == '-')
            throw std::invalid_argument("Rational: bad literal '" + text + "'");
    }

    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: bad literal '" + text + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational binomial(long top, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    Rational acc(1);
    for (long j = 0; j < k; ++j) {
        acc *= Rational(top - j);
        acc /= Rational(j + 1);
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace yso3
