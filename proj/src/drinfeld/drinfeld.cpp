#include "drinfeld/drinfeld.hpp"

#include <sstream>
#include <stdexcept>

namespace yso3 {

namespace {
const Rational kHalf(1, 2);
const Rational kMinusHalf(-1, 2);
} // namespace

OpSeries* Currents::series_by_name(const std::string& name) {
    if (name == "H") return &H;
    if (name == "Xplus") return &Xplus;
    if (name == "Xminus") return &Xminus;
    return nullptr;
}

Currents currents_from_gauss(const GaussData& g) {
    return Currents{g.f0M1, g.eM10, g.kMinus1.inverted() * g.k0};
}

Modes extract_modes(const Currents& c) {
    Modes m;
    for (int k = 0; k + 1 <= c.order(); ++k) {
        m.xPlus.push_back(c.Xplus.coeff(k + 1));
        m.xMinus.push_back(c.Xminus.coeff(k + 1));
        m.h.push_back(c.H.coeff(k + 1));
    }
    return m;
}

namespace {

BiOpSeries commutator_uv(const OpSeries& a, const OpSeries& b) {
    return BiOpSeries::outer_uv(a, b) - BiOpSeries::outer_vu(b, a);
}

// [A(u), B(v)] = sign * (1/2) * {A(u), B(u) - B(v)} / (u - v), with A = H.
CheckOutcome anticommutator_current(const OpSeries& h, const OpSeries& x, const Rational& sign,
                                    int K, const std::string& label) {
    Rational half_sign = sign * Rational(1, 2);
    BiSides sides;
    sides.lhs.push_back(plain(commutator_uv(h, x)));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(h * x + x * h, K), half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_uv(h, x), -half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_vu(x, h), -half_sign));
    return outcome_from_verdict(verify_bi_identity(sides), label);
}

CheckOutcome quadratic_current(const OpSeries& x, const Rational& sign, int K,
                               const std::string& label) {
    Rational half_sign = sign * Rational(1, 2);
    BiSides sides;
    sides.lhs.push_back(plain(commutator_uv(x, x)));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(x * x, K), half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_uv(x, x), -half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_vu(x, x), -half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_v(x * x, K), half_sign));
    return outcome_from_verdict(verify_bi_identity(sides), label);
}

} // namespace

CheckOutcome check_current_relations(const Currents& c) {
    CheckOutcome total;
    int K = c.order();

    BiSides hh;
    hh.lhs.push_back(plain(commutator_uv(c.H, c.H)));
    total.absorb(outcome_from_verdict(verify_bi_identity(hh), "[H(u),H(v)] "));

    // [X+(u), X-(v)] = -(H(u) - H(v)) / (u - v).
    BiSides xpxm;
    xpxm.lhs.push_back(plain(commutator_uv(c.Xplus, c.Xminus)));
    xpxm.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(c.H, K), Rational(-1)));
    xpxm.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_v(c.H, K)));
    total.absorb(outcome_from_verdict(verify_bi_identity(xpxm), "[X+(u),X-(v)] "));

    total.absorb(anticommutator_current(c.H, c.Xplus, Rational(-1), K, "[H(u),X+(v)] "));
    total.absorb(anticommutator_current(c.H, c.Xminus, Rational(1), K, "[H(u),X-(v)] "));
    total.absorb(quadratic_current(c.Xplus, Rational(-1), K, "[X+(u),X+(v)] "));
    total.absorb(quadratic_current(c.Xminus, Rational(1), K, "[X-(u),X-(v)] "));
    return total;
}

namespace {

std::string mode_label(const char* family, int k, int l) {
    std::ostringstream os;
    os << family << " (k,l)=(" << k << "," << l << ") ";
    return os.str();
}

CheckOutcome matrices_equal(const OpMatrix& a, const OpMatrix& b, const std::string& label) {
    if (a == b) return CheckOutcome::ok();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (a.at(i, j) != b.at(i, j)) {
                std::ostringstream os;
                os << label << "entry=(" << i << "," << j << ") lhs=" << a.at(i, j)
                   << " rhs=" << b.at(i, j);
                return CheckOutcome::fail(os.str());
            }
    return CheckOutcome::ok();
}

OpMatrix comm(const OpMatrix& a, const OpMatrix& b) { return a * b - b * a; }
OpMatrix anti(const OpMatrix& a, const OpMatrix& b) { return a * b + b * a; }

} // namespace

CheckOutcome check_mode_relations(const Modes& m, int bound) {
    int have = static_cast<int>(m.h.size());
    if (bound < 0 || 2 * bound > have - 1 || bound + 1 > have - 1)
        throw std::out_of_range("check_mode_relations: referenced mode index beyond validity");

    CheckOutcome total;
    Rational half(1, 2);
    for (int k = 0; k <= bound; ++k)
        for (int l = 0; l <= bound; ++l) {
            OpMatrix zero(m.h[0].dim());
            total.absorb(matrices_equal(comm(m.h[k], m.h[l]), zero, mode_label("[h,h]", k, l)));
            total.absorb(matrices_equal(comm(m.xPlus[k], m.xMinus[l]), m.h[k + l],
                                        mode_label("[x+,x-]=h", k, l)));
            if (k == 0) {
                total.absorb(matrices_equal(comm(m.h[0], m.xPlus[l]), m.xPlus[l],
                                            mode_label("[h0,x+]", k, l)));
                total.absorb(matrices_equal(comm(m.h[0], m.xMinus[l]), -m.xMinus[l],
                                            mode_label("[h0,x-]", k, l)));
            }
            total.absorb(matrices_equal(
                comm(m.h[k + 1], m.xPlus[l]) - comm(m.h[k], m.xPlus[l + 1]),
                anti(m.h[k], m.xPlus[l]) * half, mode_label("h-x+ recurrence", k, l)));
            total.absorb(matrices_equal(
                comm(m.h[k + 1], m.xMinus[l]) - comm(m.h[k], m.xMinus[l + 1]),
                anti(m.h[k], m.xMinus[l]) * (-half), mode_label("h-x- recurrence", k, l)));
            total.absorb(matrices_equal(
                comm(m.xPlus[k + 1], m.xPlus[l]) - comm(m.xPlus[k], m.xPlus[l + 1]),
                anti(m.xPlus[k], m.xPlus[l]) * half, mode_label("x+-x+ recurrence", k, l)));
            total.absorb(matrices_equal(
                comm(m.xMinus[k + 1], m.xMinus[l]) - comm(m.xMinus[k], m.xMinus[l + 1]),
                anti(m.xMinus[k], m.xMinus[l]) * (-half), mode_label("x--x- recurrence", k, l)));
        }
    return total;
}

CheckOutcome check_inverse_map(const GaussData& g, const Currents& c) {
    OpSeries prod = g.kMinus1 * c.H.shifted(kMinusHalf);
    OpSeries unit = OpSeries::one(OpMatrix(g.dim()), g.order());
    return outcome_series_equal(prod, unit, "k_{-1}(u)H(u-1/2) vs 1 ");
}

CheckOutcome check_generation_roundtrip(const RepT& t, const GaussData& g) {
    GaussData rebuilt = g;
    rebuilt.k0 = g.kMinus1 * g.kMinus1.shifted(kHalf).inverted();
    rebuilt.k1 = g.kMinus1.shifted(kHalf).inverted();
    rebuilt.e01 = -g.eM10.shifted(kMinusHalf);
    rebuilt.f10 = -g.f0M1.shifted(kMinusHalf);
    rebuilt.eM11 = (g.eM10 * g.eM10).scaled(kMinusHalf);
    rebuilt.f1M1 = (g.f0M1 * g.f0M1).scaled(kMinusHalf);
    RepT reassembled = gauss_reconstruct(rebuilt);
    CheckOutcome total;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            std::ostringstream os;
            os << "regenerated t(" << i << "," << j << ") ";
            total.absorb(outcome_series_equal(reassembled.at(i, j), t.at(i, j), os.str()));
        }
    return total;
}

} // namespace yso3
