#include <doctest.h>

#include "drinfeld/drinfeld.hpp"

using namespace yso3;

namespace {

Rational rr(long n, long d = 1) { return Rational(n, d); }

const int K = 8;

GaussData gauss_at(const Rational& a, int order = K) {
    return gauss_decompose(build_rep({{a}, order}));
}

} // namespace

TEST_CASE("currents on the trivial decomposition") {
    RepT id(3, 5);
    for (int i = -1; i <= 1; ++i) id.at(i, i) = OpSeries::one(OpMatrix(3), 5);
    Currents c = currents_from_gauss(gauss_decompose(id));
    OpSeries one = OpSeries::one(OpMatrix(3), 5), zero(0, 5, OpMatrix(3));
    CHECK(!series_mismatch(c.H, one));
    CHECK(!series_mismatch(c.Xplus, zero));
    CHECK(!series_mismatch(c.Xminus, zero));
}

TEST_CASE("H leads with the identity and equals the shifted inverse of k_{-1}") {
    GaussData g = gauss_at(rr(0));
    Currents c = currents_from_gauss(g);
    CHECK(c.H.coeff(0) == OpMatrix::identity(3));
    CHECK(!series_mismatch(c.H, g.kMinus1.shifted(rr(1, 2)).inverted()));
}

TEST_CASE("mode extraction and roundtrip") {
    GaussData g = gauss_at(rr(1, 3));
    Currents c = currents_from_gauss(g);
    Modes m = extract_modes(c);
    REQUIRE(static_cast<int>(m.h.size()) == K);
    CHECK(m.xMinus[0] == g.eM10.coeff(1)); // x^-_0 = e^{(1)}_{-1,0}
    // 1 + sum_k h_k u^{-k-1} reproduces H through the valid order.
    OpSeries rebuilt = OpSeries::one(OpMatrix(3), K);
    for (int k = 0; k < K; ++k) rebuilt.set_coeff(k + 1, m.h[static_cast<size_t>(k)]);
    CHECK(!series_mismatch(rebuilt, c.H));

    Currents zero{OpSeries(0, 4, OpMatrix(3)), OpSeries(0, 4, OpMatrix(3)),
                  OpSeries::one(OpMatrix(3), 4)};
    Modes zm = extract_modes(zero);
    for (const auto& x : zm.xPlus) CHECK(x.is_zero());
    for (const auto& h : zm.h) CHECK(h.is_zero());
}

TEST_CASE("current relations hold with both verification paths") {
    for (const Rational& a : {rr(0), rr(1, 3)}) {
        CheckOutcome oc = check_current_relations(currents_from_gauss(gauss_at(a)));
        CHECK(oc.pass);
        CHECK(oc.dual_path);
        CHECK(oc.paths_agree);
    }
}

TEST_CASE("current relation sign flip fails") {
    Currents c = currents_from_gauss(gauss_at(rr(0)));
    // [H(u), X^-(v)] with the X^+ sign: wrong.
    BiSides sides;
    sides.lhs.push_back(plain(BiOpSeries::outer_uv(c.H, c.Xminus) -
                              BiOpSeries::outer_vu(c.Xminus, c.H)));
    Rational wrong_sign = rr(-1, 2);
    sides.rhs.push_back(over_pole(rr(0),
                                  BiOpSeries::embed_u(c.H * c.Xminus + c.Xminus * c.H, K),
                                  wrong_sign));
    sides.rhs.push_back(over_pole(rr(0), BiOpSeries::outer_uv(c.H, c.Xminus), -wrong_sign));
    sides.rhs.push_back(over_pole(rr(0), BiOpSeries::outer_vu(c.Xminus, c.H), -wrong_sign));
    BiVerdict v = verify_bi_identity(sides);
    CHECK(!v.pass());
    CHECK(v.paths_agree());
}

TEST_CASE("mode relations through bound 6 at deep truncation") {
    const int bound = 6;
    const int deep = 2 * bound + 1;
    Currents c = currents_from_gauss(gauss_at(rr(0), deep));
    Modes m = extract_modes(c);
    CheckOutcome oc = check_mode_relations(m, bound);
    CHECK(oc.pass);

    // Spot checks of single relations.
    OpMatrix h0 = m.h[0];
    CHECK(m.xPlus[0] * m.xMinus[0] - m.xMinus[0] * m.xPlus[0] == h0);
    CHECK(h0 * m.xMinus[3] - m.xMinus[3] * h0 == -m.xMinus[3]);
    CHECK(h0 * m.xPlus[2] - m.xPlus[2] * h0 == m.xPlus[2]);
}

TEST_CASE("mode relations error out when a referenced mode is invalid") {
    Currents c = currents_from_gauss(gauss_at(rr(0), 6));
    Modes m = extract_modes(c);
    CHECK_THROWS_AS(check_mode_relations(m, 6), std::out_of_range);
}

TEST_CASE("current and mode verdicts fail together under mutation") {
    const int bound = 2, deep = 8;
    Currents c = currents_from_gauss(gauss_at(rr(0), deep));
    OpMatrix m1 = c.H.coeff(2);
    m1.at(0, 0) += rr(1, 3);
    c.H.set_coeff(2, m1);
    CHECK(!check_current_relations(c).pass);
    CHECK(!check_mode_relations(extract_modes(c), bound).pass);
}

TEST_CASE("inverse map identity") {
    for (const Rational& a : {rr(0), rr(1, 3)}) {
        GaussData g = gauss_at(a);
        Currents c = currents_from_gauss(g);
        CHECK(check_inverse_map(g, c).pass);
    }
}

TEST_CASE("generation roundtrip from the three defining series") {
    for (const Rational& a : {rr(0), rr(1, 3)}) {
        RepT t = build_rep({{a}, K});
        GaussData g = gauss_decompose(t);
        CHECK(check_generation_roundtrip(t, g).pass);
    }
    RepT t2 = build_rep({{rr(0), rr(1, 3)}, 6});
    CHECK(check_generation_roundtrip(t2, gauss_decompose(t2)).pass);
}

TEST_CASE("generation roundtrip fails under a perturbed generator") {
    RepT t = build_rep({{rr(0)}, K});
    GaussData g = gauss_decompose(t);
    OpMatrix m = g.eM10.coeff(1);
    m.at(0, 0) += rr(1);
    g.eM10.set_coeff(1, m);
    CheckOutcome oc = check_generation_roundtrip(t, g);
    CHECK(!oc.pass);
    CHECK(oc.failure.find("regenerated") != std::string::npos);
}
