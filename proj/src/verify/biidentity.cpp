#include "verify/biidentity.hpp"

#include <algorithm>

namespace yso3 {

namespace {

std::vector<Rational> distinct_poles(const BiSides& sides) {
    std::vector<Rational> poles;
    auto collect = [&](const std::vector<BiTerm>& terms) {
        for (const auto& t : terms)
            if (t.pole && std::find(poles.begin(), poles.end(), *t.pole) == poles.end())
                poles.push_back(*t.pole);
    };
    collect(sides.lhs);
    collect(sides.rhs);
    std::sort(poles.begin(), poles.end());
    return poles;
}

std::optional<BiOpSeries> sum_cleared(const std::vector<BiTerm>& terms,
                                      const std::vector<Rational>& poles) {
    std::optional<BiOpSeries> acc;
    for (const auto& t : terms) {
        BiPoly clear = BiPoly::constant(Rational(1));
        for (const auto& p : poles)
            if (!t.pole || *t.pole != p) clear = clear * BiPoly::u_minus_v_minus(p);
        BiOpSeries contrib = t.series.scaled(t.scalar).mul_poly(clear);
        acc = acc ? (*acc + contrib) : contrib;
    }
    return acc;
}

std::optional<BiOpSeries> sum_geometric(const std::vector<BiTerm>& terms) {
    std::optional<BiOpSeries> acc;
    for (const auto& t : terms) {
        BiOpSeries contrib = t.pole
                                 ? BiOpSeries::geometric_pole_product(*t.pole, t.series.scaled(t.scalar))
                                 : t.series.scaled(t.scalar);
        acc = acc ? (*acc + contrib) : contrib;
    }
    return acc;
}

BiOpSeries zeros_matching(const BiOpSeries& like) {
    return BiOpSeries(like.loU(), like.hiU(), like.loV(), like.hiV(),
                      zero_like(like.exemplar()), like.diag());
}

PathOutcome compare(std::optional<BiOpSeries> a, std::optional<BiOpSeries> b) {
    PathOutcome out;
    if (!a && !b) return out; // 0 = 0
    if (!a) a = zeros_matching(*b);
    if (!b) b = zeros_matching(*a);
    long compared = 0;
    auto mm = BiOpSeries::mismatch(*a, *b, &compared);
    out.vacuous = (compared == 0);
    if (mm) {
        out.pass = false;
        out.fail = *mm;
    }
    return out;
}

} // namespace

BiVerdict verify_bi_identity(const BiSides& sides) {
    BiVerdict v;
    std::vector<Rational> poles = distinct_poles(sides);
    v.cleared = compare(sum_cleared(sides.lhs, poles), sum_cleared(sides.rhs, poles));
    v.geometric = compare(sum_geometric(sides.lhs), sum_geometric(sides.rhs));
    return v;
}

} // namespace yso3
