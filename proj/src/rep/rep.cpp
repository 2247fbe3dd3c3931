#include "rep/rep.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace yso3 {

namespace {

const Rational kHalf(1, 2);
const int kLabels[3] = {-1, 0, 1};

const RMatrixFamily& so3_family() {
    static const RMatrixFamily fam = build_r_family(3);
    return fam;
}

std::string aux_entry_prefix(int i, int a, int j, int b) {
    std::ostringstream os;
    os << "aux=((" << i << "," << a << "),(" << j << "," << b << ")) ";
    return os.str();
}

std::string quad_prefix(const char* tag, int i, int j, int k, int l) {
    std::ostringstream os;
    os << tag << "=(" << i << "," << j << "," << k << "," << l << ") ";
    return os.str();
}

// Memoized outer products between two entry families: uv(i,j,k,l) is
// fu_{ij}(u) * fv_{kl}(v), vu(k,l,i,j) is fv_{kl}(v) * fu_{ij}(u).
class OuterCache {
public:
    OuterCache(const RepT& fu, const RepT& fv) : fu_(fu), fv_(fv) {}

    const BiOpSeries& uv(int i, int j, int k, int l) {
        auto key = std::array<int, 4>{i, j, k, l};
        auto it = uv_.find(key);
        if (it == uv_.end())
            it = uv_.emplace(key, BiOpSeries::outer_uv(fu_.at(i, j), fv_.at(k, l))).first;
        return it->second;
    }
    const BiOpSeries& vu(int k, int l, int i, int j) {
        auto key = std::array<int, 4>{k, l, i, j};
        auto it = vu_.find(key);
        if (it == vu_.end())
            it = vu_.emplace(key, BiOpSeries::outer_vu(fv_.at(k, l), fu_.at(i, j))).first;
        return it->second;
    }

private:
    const RepT& fu_;
    const RepT& fv_;
    std::map<std::array<int, 4>, BiOpSeries> uv_, vu_;
};

} // namespace

bool RepT::has_unit_constant_term() const {
    for (int i : kLabels)
        for (int j : kLabels) {
            OpMatrix expect = (i == j) ? OpMatrix::identity(dim_) : OpMatrix(dim_);
            if (at(i, j).coeff(0) != expect) return false;
        }
    return true;
}

RepT eval_rep_raw(const Rational& a, int K) {
    const RMatrixFamily& fam = so3_family();
    RepT t(3, K);
    for (int i : kLabels)
        for (int j : kLabels) {
            OpSeries entry(0, K, OpMatrix(3));
            for (int k : kLabels)
                for (int l : kLabels) {
                    const RatFunc& f =
                        fam.r_entry(RepT::pos(i) * 3 + RepT::pos(k), RepT::pos(j) * 3 + RepT::pos(l));
                    if (f.is_zero()) continue;
                    RatSeries s = expand_at_infinity(f.compose_linear(Rational(1), -a), K);
                    for (int r = std::max(0, s.lo()); r <= K; ++r) {
                        Rational c = s.coeff(r);
                        if (c.is_zero()) continue;
                        OpMatrix m = entry.coeff(r);
                        m.at(RepT::pos(k), RepT::pos(l)) += c;
                        entry.set_coeff(r, m);
                    }
                }
            t.at(i, j) = entry;
        }
    return t;
}

RatSeries unitarity_scalar(const RepT& raw) {
    int K = raw.order();
    RatSeries g(0, K, Rational());
    OpMatrix id = OpMatrix::identity(raw.dim());
    bool have_g = false;
    for (int i : kLabels)
        for (int k : kLabels) {
            OpSeries prod(0, K, OpMatrix(raw.dim()));
            for (int j : kLabels) prod = prod + raw.at(i, j) * raw.at(-k, -j).shifted(kHalf);
            if (i != k) {
                if (!prod.is_zero_through_valid()) throw std::domain_error("not scalar");
                continue;
            }
            RatSeries diag(0, K, Rational());
            for (int r = 0; r <= K; ++r) {
                Rational s = prod.coeff(r).at(0, 0);
                if (prod.coeff(r) != id * s) throw std::domain_error("not scalar");
                diag.set_coeff(r, s);
            }
            if (!have_g) {
                g = diag;
                have_g = true;
            } else if (!(g == diag)) {
                throw std::domain_error("not scalar");
            }
        }
    return g;
}

RatSeries normalize_scalar(const Rational& a, int K) {
    RatSeries g = unitarity_scalar(eval_rep_raw(a, K));
    if (g.coeff(0) != Rational(1)) throw std::domain_error("normalize_scalar: g_0 != 1");
    RatSeries c = RatSeries::one(Rational(1), K);
    for (int m = 1; m <= K; ++m) {
        RatSeries prod = c * c.shifted(kHalf) * g;
        // c_m enters the order-m coefficient twice (once per factor of c).
        c.set_coeff(m, -prod.coeff(m) / Rational(2));
    }
    return c;
}

RepT tensor_rep(const RepT& a, const RepT& b) {
    int dim = a.dim() * b.dim();
    int order = std::min(a.order(), b.order());
    RepT out(dim, order);
    for (int i : kLabels)
        for (int j : kLabels) {
            OpSeries acc(0, order, OpMatrix(dim));
            for (int k : kLabels)
                acc = acc + kron_with_identity(a.at(i, k), b.dim()) *
                                identity_kron_with(a.dim(), b.at(k, j));
            out.at(i, j) = acc;
        }
    return out;
}

RepT scale_rep(const RepT& t, const RatSeries& c) {
    OpSeries lifted = lift_scalar_series(c, t.dim());
    RepT out(t.dim(), std::min(t.order(), c.valid_order()));
    for (int i : kLabels)
        for (int j : kLabels) out.at(i, j) = lifted * t.at(i, j);
    return out;
}

RepT build_rep(const EvalParams& params) {
    if (params.points.empty()) throw std::invalid_argument("build_rep: no evaluation points");
    auto single = [&](const Rational& a) {
        return scale_rep(eval_rep_raw(a, params.order), normalize_scalar(a, params.order));
    };
    RepT acc = single(params.points.front());
    for (size_t m = 1; m < params.points.size(); ++m)
        acc = tensor_rep(acc, single(params.points[m]));
    return acc;
}

RepT transpose_rep(const RepT& t, const Rational& shift) {
    RepT out(t.dim(), t.order());
    for (int i : kLabels)
        for (int j : kLabels) out.at(i, j) = t.at(-j, -i).shifted(shift);
    return out;
}

RepTInv invert_rep(const RepT& t) {
    int d = t.dim(), big = 3 * d;
    OpSeries flat(0, t.order(), OpMatrix(big));
    for (int r = 0; r <= t.order(); ++r) {
        OpMatrix m(big);
        for (int i : kLabels)
            for (int j : kLabels) {
                OpMatrix block = t.at(i, j).coeff(r);
                int ro = RepT::pos(i) * d, co = RepT::pos(j) * d;
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) m.at(ro + x, co + y) = block.at(x, y);
            }
        flat.set_coeff(r, m);
    }
    OpSeries inv = flat.inverted();
    RepTInv out(d, t.order());
    for (int r = 0; r <= t.order(); ++r) {
        const OpMatrix m = inv.coeff(r);
        for (int i : kLabels)
            for (int j : kLabels) {
                OpMatrix block(d);
                int ro = RepT::pos(i) * d, co = RepT::pos(j) * d;
                for (int x = 0; x < d; ++x)
                    for (int y = 0; y < d; ++y) block.at(x, y) = m.at(ro + x, co + y);
                out.at(i, j).set_coeff(r, block);
            }
    }
    return out;
}

CheckOutcome check_rtt(const RepT& t) {
    const RMatrixFamily& fam = so3_family();
    OuterCache cache(t, t);
    CheckOutcome total;
    for (int i : kLabels)
        for (int a : kLabels)
            for (int j : kLabels)
                for (int b : kLabels) {
                    int row = RepT::pos(i) * 3 + RepT::pos(a);
                    int col = RepT::pos(j) * 3 + RepT::pos(b);
                    BiSides sides;
                    // R(u-v) T1(u) T2(v): identity, -P/(u-v), Q/(u-v-1/2) parts.
                    sides.lhs.push_back(plain(cache.uv(i, j, a, b)));
                    std::optional<BiOpSeries> sp, sq, rp, rq;
                    for (int k : kLabels)
                        for (int c : kLabels) {
                            int mid = RepT::pos(k) * 3 + RepT::pos(c);
                            const Rational& pe = fam.P.at(row, mid);
                            if (!pe.is_zero()) {
                                BiOpSeries term = cache.uv(k, j, c, b).scaled(pe);
                                sp = sp ? (*sp + term) : term;
                            }
                            const Rational& qe = fam.Q.at(row, mid);
                            if (!qe.is_zero()) {
                                BiOpSeries term = cache.uv(k, j, c, b).scaled(qe);
                                sq = sq ? (*sq + term) : term;
                            }
                            const Rational& pr = fam.P.at(mid, col);
                            if (!pr.is_zero()) {
                                BiOpSeries term = cache.vu(a, c, i, k).scaled(pr);
                                rp = rp ? (*rp + term) : term;
                            }
                            const Rational& qr = fam.Q.at(mid, col);
                            if (!qr.is_zero()) {
                                BiOpSeries term = cache.vu(a, c, i, k).scaled(qr);
                                rq = rq ? (*rq + term) : term;
                            }
                        }
                    if (sp) sides.lhs.push_back(over_pole(Rational(0), *sp, Rational(-1)));
                    if (sq) sides.lhs.push_back(over_pole(kHalf, *sq));
                    // T2(v) T1(u) R(u-v).
                    sides.rhs.push_back(plain(cache.vu(a, b, i, j)));
                    if (rp) sides.rhs.push_back(over_pole(Rational(0), *rp, Rational(-1)));
                    if (rq) sides.rhs.push_back(over_pole(kHalf, *rq));

                    total.absorb(outcome_from_verdict(verify_bi_identity(sides),
                                                      aux_entry_prefix(i, a, j, b)));
                }
    return total;
}

namespace {

CheckOutcome compare_to_unit_matrix(const RepT& prod_owner, const OpSeries& entry, int i, int k) {
    OpSeries expect = (i == k) ? OpSeries::one(OpMatrix(prod_owner.dim()), prod_owner.order())
                               : OpSeries(0, prod_owner.order(), OpMatrix(prod_owner.dim()));
    std::ostringstream os;
    os << "product=(" << i << "," << k << ") ";
    return outcome_series_equal(entry, expect, os.str());
}

} // namespace

CheckOutcome check_unitarity(const RepT& t) {
    CheckOutcome total;
    for (int i : kLabels)
        for (int k : kLabels) {
            OpSeries left(0, t.order(), OpMatrix(t.dim()));
            OpSeries right(0, t.order(), OpMatrix(t.dim()));
            for (int j : kLabels) {
                left = left + t.at(i, j) * t.at(-k, -j).shifted(kHalf);
                right = right + t.at(-j, -i).shifted(kHalf) * t.at(j, k);
            }
            total.absorb(compare_to_unit_matrix(t, left, i, k));
            total.absorb(compare_to_unit_matrix(t, right, i, k));
        }
    return total;
}

CheckOutcome check_gen_rel_t(const RepT& t) {
    OuterCache cache(t, t);
    CheckOutcome total;
    for (int i : kLabels)
        for (int j : kLabels)
            for (int k : kLabels)
                for (int l : kLabels) {
                    BiSides sides;
                    sides.lhs.push_back(plain(cache.uv(i, j, k, l)));
                    sides.lhs.push_back(plain(cache.vu(k, l, i, j), Rational(-1)));

                    sides.rhs.push_back(over_pole(Rational(0), cache.uv(k, j, i, l)));
                    sides.rhs.push_back(over_pole(Rational(0), cache.vu(k, j, i, l), Rational(-1)));
                    if (k == -i) {
                        std::optional<BiOpSeries> sum;
                        for (int p : kLabels) {
                            const BiOpSeries& term = cache.uv(p, j, -p, l);
                            sum = sum ? (*sum + term) : term;
                        }
                        sides.rhs.push_back(over_pole(kHalf, *sum, Rational(-1)));
                    }
                    if (l == -j) {
                        std::optional<BiOpSeries> sum;
                        for (int p : kLabels) {
                            const BiOpSeries& term = cache.vu(k, -p, i, p);
                            sum = sum ? (*sum + term) : term;
                        }
                        sides.rhs.push_back(over_pole(kHalf, *sum));
                    }
                    total.absorb(outcome_from_verdict(verify_bi_identity(sides),
                                                      quad_prefix("quad", i, j, k, l)));
                }
    return total;
}

CheckOutcome check_rtt_inverse_form(const RepT& t, const RepTInv& tinv) {
    const RMatrixFamily& fam = so3_family();
    OuterCache t_tp(t, tinv);  // uv: t(u) * t'(v); vu: t'(v) * t(u)
    CheckOutcome total;
    for (int i : kLabels)
        for (int a : kLabels)
            for (int j : kLabels)
                for (int b : kLabels) {
                    BiSides sides;
                    // T2^{-1}(v) R(u-v) T1(u): sum_{c,l} t'_{ac}(v) R_{(ic),(lb)} t_{lj}(u).
                    sides.lhs.push_back(plain(t_tp.vu(a, b, i, j)));
                    std::optional<BiOpSeries> lp, lq, rp, rq;
                    for (int c : kLabels)
                        for (int l : kLabels) {
                            int rrow = RepT::pos(i) * 3 + RepT::pos(c);
                            int rcol = RepT::pos(l) * 3 + RepT::pos(b);
                            const Rational& pe = fam.P.at(rrow, rcol);
                            if (!pe.is_zero()) {
                                BiOpSeries term = t_tp.vu(a, c, l, j).scaled(pe);
                                lp = lp ? (*lp + term) : term;
                            }
                            const Rational& qe = fam.Q.at(rrow, rcol);
                            if (!qe.is_zero()) {
                                BiOpSeries term = t_tp.vu(a, c, l, j).scaled(qe);
                                lq = lq ? (*lq + term) : term;
                            }
                            // T1(u) R(u-v) T2^{-1}(v): sum_{k,d} t_{ik}(u) R_{(ka),(jd)} t'_{db}(v).
                            int srow = RepT::pos(c) * 3 + RepT::pos(a);
                            int scol = RepT::pos(j) * 3 + RepT::pos(l);
                            const Rational& pe2 = fam.P.at(srow, scol);
                            if (!pe2.is_zero()) {
                                BiOpSeries term = t_tp.uv(i, c, l, b).scaled(pe2);
                                rp = rp ? (*rp + term) : term;
                            }
                            const Rational& qe2 = fam.Q.at(srow, scol);
                            if (!qe2.is_zero()) {
                                BiOpSeries term = t_tp.uv(i, c, l, b).scaled(qe2);
                                rq = rq ? (*rq + term) : term;
                            }
                        }
                    if (lp) sides.lhs.push_back(over_pole(Rational(0), *lp, Rational(-1)));
                    if (lq) sides.lhs.push_back(over_pole(kHalf, *lq));
                    sides.rhs.push_back(plain(t_tp.uv(i, j, a, b)));
                    if (rp) sides.rhs.push_back(over_pole(Rational(0), *rp, Rational(-1)));
                    if (rq) sides.rhs.push_back(over_pole(kHalf, *rq));

                    total.absorb(outcome_from_verdict(verify_bi_identity(sides),
                                                      aux_entry_prefix(i, a, j, b)));
                }
    return total;
}

CheckOutcome check_gen_rel_tprime(const RepT& t, const RepTInv& tinv) {
    OuterCache c(t, tinv);  // uv: t(u) * t'(v); vu: t'(v) * t(u)
    CheckOutcome total;
    for (int p : kLabels)
        for (int q : kLabels)
            for (int r : kLabels)
                for (int s : kLabels) {
                    BiSides sides;
                    sides.lhs.push_back(plain(c.uv(p, q, r, s)));
                    sides.lhs.push_back(plain(c.vu(r, s, p, q), Rational(-1)));

                    sides.rhs.push_back(over_pole(kHalf, c.vu(r, -p, -s, q)));
                    sides.rhs.push_back(over_pole(kHalf, c.uv(p, -r, -q, s), Rational(-1)));
                    if (q == r) {
                        std::optional<BiOpSeries> sum;
                        for (int x : kLabels) {
                            const BiOpSeries& term = c.uv(p, x, x, s);
                            sum = sum ? (*sum + term) : term;
                        }
                        sides.rhs.push_back(over_pole(Rational(0), *sum));
                    }
                    if (p == s) {
                        std::optional<BiOpSeries> sum;
                        for (int x : kLabels) {
                            const BiOpSeries& term = c.vu(r, x, x, q);
                            sum = sum ? (*sum + term) : term;
                        }
                        sides.rhs.push_back(over_pole(Rational(0), *sum, Rational(-1)));
                    }
                    total.absorb(outcome_from_verdict(verify_bi_identity(sides),
                                                      quad_prefix("quad", p, q, r, s)));
                }
    return total;
}

} // namespace yso3
