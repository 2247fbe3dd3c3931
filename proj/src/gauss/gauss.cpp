#include "gauss/gauss.hpp"

namespace yso3 {

namespace {
const Rational kHalf(1, 2);
const Rational kMinusHalf(-1, 2);
} // namespace

OpSeries* GaussData::series_by_name(const std::string& name) {
    if (name == "kMinus1") return &kMinus1;
    if (name == "k0") return &k0;
    if (name == "k1") return &k1;
    if (name == "eM10") return &eM10;
    if (name == "e01") return &e01;
    if (name == "eM11") return &eM11;
    if (name == "f0M1") return &f0M1;
    if (name == "f10") return &f10;
    if (name == "f1M1") return &f1M1;
    return nullptr;
}

GaussData gauss_decompose(const RepT& t) {
    const OpSeries& tm1m1 = t.at(-1, -1);
    OpSeries kM1 = tm1m1;
    OpSeries kM1_inv = kM1.inverted();
    OpSeries eM10 = kM1_inv * t.at(-1, 0);
    OpSeries eM11 = kM1_inv * t.at(-1, 1);
    OpSeries f0M1 = t.at(0, -1) * kM1_inv;
    OpSeries f1M1 = t.at(1, -1) * kM1_inv;
    OpSeries k0 = t.at(0, 0) - f0M1 * kM1 * eM10;
    OpSeries k0_inv = k0.inverted();
    OpSeries e01 = k0_inv * (t.at(0, 1) - f0M1 * kM1 * eM11);
    OpSeries f10 = (t.at(1, 0) - f1M1 * kM1 * eM10) * k0_inv;
    OpSeries k1 = t.at(1, 1) - f1M1 * kM1 * eM11 - f10 * k0 * e01;
    return GaussData{kM1, k0, k1, eM10, e01, eM11, f0M1, f10, f1M1};
}

RepT gauss_reconstruct(const GaussData& g) {
    RepT t(g.dim(), g.order());
    t.at(-1, -1) = g.kMinus1;
    t.at(-1, 0) = g.kMinus1 * g.eM10;
    t.at(-1, 1) = g.kMinus1 * g.eM11;
    t.at(0, -1) = g.f0M1 * g.kMinus1;
    t.at(0, 0) = g.k0 + g.f0M1 * g.kMinus1 * g.eM10;
    t.at(0, 1) = g.k0 * g.e01 + g.f0M1 * g.kMinus1 * g.eM11;
    t.at(1, -1) = g.f1M1 * g.kMinus1;
    t.at(1, 0) = g.f10 * g.k0 + g.f1M1 * g.kMinus1 * g.eM10;
    t.at(1, 1) = g.k1 + g.f10 * g.k0 * g.e01 + g.f1M1 * g.kMinus1 * g.eM11;
    return t;
}

CheckOutcome check_gauss_roundtrip(const RepT& t, const GaussData& g) {
    CheckOutcome total;
    RepT rebuilt = gauss_reconstruct(g);
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            std::ostringstream os;
            os << "reassembled t(" << i << "," << j << ") ";
            total.absorb(outcome_series_equal(rebuilt.at(i, j), t.at(i, j), os.str()));
        }
    if (!total.pass) return total;
    GaussData again = gauss_decompose(rebuilt);
    const char* names[] = {"kMinus1", "k0", "k1", "eM10", "e01", "eM11", "f0M1", "f10", "f1M1"};
    for (const char* n : names) {
        OpSeries* lhs = again.series_by_name(n);
        OpSeries* rhs = const_cast<GaussData&>(g).series_by_name(n);
        total.absorb(outcome_series_equal(*lhs, *rhs, std::string("refixpoint ") + n + " "));
    }
    return total;
}

CheckOutcome check_k1_inverse_shift(const GaussData& g) {
    return outcome_series_equal(g.k1.inverted(), g.kMinus1.shifted(kHalf),
                                "k1^{-1}(u) vs k_{-1}(u+1/2) ");
}

CheckOutcome check_e01_from_unitarity(const GaussData& g) {
    return outcome_series_equal(-(g.e01 * g.k1.inverted()),
                                g.kMinus1.shifted(kHalf) * g.eM10.shifted(kHalf),
                                "-e01*k1^{-1} vs k_{-1}e_{-1,0}(u+1/2) ");
}

CheckOutcome check_f10_from_unitarity(const GaussData& g) {
    return outcome_series_equal(-(g.k1.inverted() * g.f10),
                                g.f0M1.shifted(kHalf) * g.kMinus1.shifted(kHalf),
                                "-k1^{-1}f10 vs f_{0,-1}k_{-1}(u+1/2) ");
}

CheckOutcome check_k0_inverse_cross(const GaussData& g) {
    OpSeries k1_inv = g.k1.inverted();
    return outcome_series_equal(g.k0.inverted() + g.e01 * k1_inv * g.f10,
                                g.k0.shifted(kHalf) +
                                    g.f0M1.shifted(kHalf) * g.kMinus1.shifted(kHalf) *
                                        g.eM10.shifted(kHalf),
                                "k0^{-1}+e01 k1^{-1} f10 vs shifted diagonal ");
}

CheckOutcome check_unitarity_consequences(const GaussData& g) {
    CheckOutcome total;
    total.absorb(check_k1_inverse_shift(g));
    total.absorb(check_e01_from_unitarity(g));
    total.absorb(check_f10_from_unitarity(g));
    total.absorb(check_k0_inverse_cross(g));
    return total;
}

namespace {

BiOpSeries commutator_uv(const OpSeries& a, const OpSeries& b) {
    return BiOpSeries::outer_uv(a, b) - BiOpSeries::outer_vu(b, a);
}

} // namespace

CheckOutcome check_k_family(const GaussData& g) {
    CheckOutcome total;
    int K = g.order();

    BiSides kk;
    kk.lhs.push_back(plain(commutator_uv(g.kMinus1, g.kMinus1)));
    total.absorb(outcome_from_verdict(verify_bi_identity(kk), "[k_{-1}(u),k_{-1}(v)] "));

    BiSides kk0;
    kk0.lhs.push_back(plain(commutator_uv(g.kMinus1, g.k0)));
    total.absorb(outcome_from_verdict(verify_bi_identity(kk0), "[k_{-1}(u),k_0(v)] "));

    BiSides ke;
    ke.lhs.push_back(plain(commutator_uv(g.kMinus1, g.eM10)));
    ke.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_uv(g.kMinus1, g.eM10)));
    ke.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(g.kMinus1 * g.eM10, K), Rational(-1)));
    total.absorb(outcome_from_verdict(verify_bi_identity(ke), "k-e exchange "));

    BiSides kf;
    kf.lhs.push_back(plain(commutator_uv(g.kMinus1, g.f0M1)));
    kf.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(g.f0M1 * g.kMinus1, K)));
    kf.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_vu(g.f0M1, g.kMinus1), Rational(-1)));
    total.absorb(outcome_from_verdict(verify_bi_identity(kf), "k-f exchange "));
    return total;
}

CheckOutcome check_ef_commutator(const GaussData& g) {
    int K = g.order();
    OpSeries h = g.kMinus1.inverted() * g.k0;
    BiSides sides;
    sides.lhs.push_back(plain(commutator_uv(g.eM10, g.f0M1)));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(h, K)));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_v(h, K), Rational(-1)));
    return outcome_from_verdict(verify_bi_identity(sides), "e-f commutator ");
}

CheckOutcome check_ef_reflection(const GaussData& g) {
    CheckOutcome total;
    total.absorb(outcome_series_equal(g.e01, -g.eM10.shifted(kMinusHalf),
                                      "e01(u) vs -e_{-1,0}(u-1/2) "));
    total.absorb(outcome_series_equal(g.f10, -g.f0M1.shifted(kMinusHalf),
                                      "f10(u) vs -f_{0,-1}(u-1/2) "));
    return total;
}

CheckOutcome check_k0_factorization(const GaussData& g) {
    CheckOutcome total;
    total.absorb(outcome_series_equal(g.k0, g.kMinus1 * g.kMinus1.shifted(kHalf).inverted(),
                                      "k0(u) vs k_{-1}(u)k_{-1}^{-1}(u+1/2) "));
    total.absorb(outcome_series_equal(g.kMinus1.inverted() * g.k0,
                                      g.kMinus1.shifted(kHalf).inverted(),
                                      "k_{-1}^{-1}k_0 vs k_{-1}^{-1}(u+1/2) "));
    return total;
}

namespace {

// [H(u), x(v)] = sign * (1/2) * { H(u), x(u) - x(v) } / (u - v).
CheckOutcome h_anticommutator_identity(const OpSeries& h, const OpSeries& x, const Rational& sign,
                                       int K, const std::string& label) {
    Rational half_sign = sign * Rational(1, 2);
    BiSides sides;
    sides.lhs.push_back(plain(commutator_uv(h, x)));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::embed_u(h * x + x * h, K), half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_uv(h, x), -half_sign));
    sides.rhs.push_back(over_pole(Rational(0), BiOpSeries::outer_vu(x, h), -half_sign));
    return outcome_from_verdict(verify_bi_identity(sides), label);
}

// [x(u), x(v)] = sign * (1/2) * (x(u) - x(v))^2 / (u - v).
CheckOutcome quadratic_identity(const OpSeries& x, const Rational& sign, int K,
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

CheckOutcome check_h_anticommutators(const GaussData& g) {
    CheckOutcome total;
    OpSeries h = g.kMinus1.inverted() * g.k0;
    total.absorb(h_anticommutator_identity(h, g.eM10, Rational(1), g.order(), "h-e anticommutator "));
    total.absorb(h_anticommutator_identity(h, g.f0M1, Rational(-1), g.order(), "h-f anticommutator "));
    return total;
}

CheckOutcome check_quadratic_exchange(const GaussData& g) {
    CheckOutcome total;
    total.absorb(quadratic_identity(g.eM10, Rational(1), g.order(), "e-e quadratic "));
    total.absorb(quadratic_identity(g.f0M1, Rational(-1), g.order(), "f-f quadratic "));
    return total;
}

CheckOutcome check_em11_shift_combination(const GaussData& g) {
    OpSeries e_sq = g.eM10 * g.eM10;
    OpSeries combo = g.eM11.shifted(kHalf).scaled(Rational(3)) - g.eM11 +
                     (g.eM10.shifted(kHalf) * g.eM10).scaled(Rational(3)) -
                     e_sq.scaled(Rational(2));
    OpSeries zero(0, g.order(), OpMatrix(g.dim()));
    return outcome_series_equal(combo, zero, "shift combination for e_{-1,1} ");
}

CheckOutcome check_em11_from_first_mode(const GaussData& g) {
    OpSeries e1 = OpSeries::constant(g.eM10.coeff(1), g.order());
    OpSeries mode_comm = e1 * g.eM10 - g.eM10 * e1;
    return outcome_series_equal(g.eM11, mode_comm - g.eM10 * g.eM10,
                                "e_{-1,1} vs [e^{(1)},e_{-1,0}] - e^2 ");
}

CheckOutcome check_first_mode_shift(const GaussData& g) {
    OpSeries e1 = OpSeries::constant(g.eM10.coeff(1), g.order());
    OpSeries mode_comm = e1 * g.eM10 - g.eM10 * e1;
    return outcome_series_equal(mode_comm,
                                g.eM10 * g.eM10 - g.eM10.shifted(kHalf) * g.eM10 -
                                    g.eM11.shifted(kHalf),
                                "[e^{(1)},e_{-1,0}] shift form ");
}

CheckOutcome check_em11_half_square(const GaussData& g) {
    return outcome_series_equal(g.eM11, (g.eM10 * g.eM10).scaled(kMinusHalf),
                                "e_{-1,1} half-square ");
}

CheckOutcome check_f1m1_half_square(const GaussData& g) {
    // f-side mirror of the half-square law. The mirror generator of e_{-1,0}
    // is f_{0,-1}; equivalently -1/2 f_{10}(u+1/2)^2.
    return outcome_series_equal(g.f1M1, (g.f0M1 * g.f0M1).scaled(kMinusHalf),
                                "f_{1,-1} half-square ");
}

CheckOutcome check_em11_f1m1_laws(const GaussData& g) {
    CheckOutcome total;
    total.absorb(check_em11_shift_combination(g));
    total.absorb(check_em11_from_first_mode(g));
    total.absorb(check_first_mode_shift(g));
    total.absorb(check_em11_half_square(g));
    total.absorb(check_f1m1_half_square(g));
    return total;
}

CheckOutcome check_k_consistency_triangle(const GaussData& g) {
    return outcome_series_equal(g.k0 * g.kMinus1.shifted(kHalf), g.kMinus1,
                                "k0(u)k_{-1}(u+1/2) vs k_{-1}(u) ");
}

} // namespace yso3
