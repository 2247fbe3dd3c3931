#include "rmatrix/rmatrix.hpp"

#include "exact/series.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace yso3 {

int SoIndexing::pos(int label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("SoIndexing: unknown label");
}

SoIndexing so_indexing(int N) {
    if (N < 2) throw std::invalid_argument("so_indexing: N must be >= 2");
    SoIndexing idx;
    idx.N = N;
    idx.n = N / 2;
    for (int l = -idx.n; l <= idx.n; ++l) {
        if (l == 0 && N % 2 == 0) continue;
        idx.labels.push_back(l);
    }
    return idx;
}

OpMatrix flip_operator(int N) {
    OpMatrix p(N * N);
    // P(e_c (x) e_d) = e_d (x) e_c, i.e. P_{(a,b),(c,d)} = delta_{ad} delta_{bc}.
    for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) p.at(d * N + c, c * N + d) = Rational(1);
    return p;
}

OpMatrix q_operator(int N) {
    SoIndexing idx = so_indexing(N);
    OpMatrix q(N * N);
    // Q_{(a,b),(c,d)} = delta_{b,-a} delta_{d,-c} in label terms.
    for (int a : idx.labels)
        for (int c : idx.labels) {
            int pa = idx.pos(a), pma = idx.pos(-a);
            int pc = idx.pos(c), pmc = idx.pos(-c);
            q.at(pa * N + pma, pc * N + pmc) = Rational(1);
        }
    return q;
}

OpMatrix partial_transpose_first(const OpMatrix& x, const SoIndexing& idx) {
    int N = idx.N;
    if (x.dim() != N * N) throw std::invalid_argument("partial_transpose_first: dimension mismatch");
    OpMatrix r(N * N);
    // X = sum e_ij (x) Y_ij  ->  sum e_{-j,-i} (x) Y_ij.
    for (int i : idx.labels)
        for (int j : idx.labels) {
            int pi = idx.pos(i), pj = idx.pos(j);
            int pti = idx.pos(-j), ptj = idx.pos(-i);
            for (int b = 0; b < N; ++b)
                for (int d = 0; d < N; ++d)
                    r.at(pti * N + b, ptj * N + d) = x.at(pi * N + b, pj * N + d);
        }
    return r;
}

RMatrixFamily build_r_family(int N) {
    if (N < 3) throw std::invalid_argument("build_r_family: N must be >= 3");
    RMatrixFamily fam{so_indexing(N), Rational(N - 2, 2), flip_operator(N), q_operator(N), {}};
    int dim = N * N;
    fam.R.assign(static_cast<size_t>(dim) * dim, RatFunc());
    Poly u = Poly::x();
    Poly u_minus_kappa = u - Poly(fam.kappa);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            RatFunc entry((r == c) ? RatFunc(Rational(1)) : RatFunc());
            if (!fam.P.at(r, c).is_zero())
                entry = entry - RatFunc(Poly(fam.P.at(r, c)), u);
            if (!fam.Q.at(r, c).is_zero())
                entry = entry + RatFunc(Poly(fam.Q.at(r, c)), u_minus_kappa);
            fam.r_entry(r, c) = entry;
        }
    return fam;
}

namespace {

// Sparse matrix of bivariate polynomials, row -> (col -> entry).
using SparseBP = std::vector<std::map<int, BiPoly>>;

SparseBP sparse_mul(const SparseBP& a, const SparseBP& b) {
    SparseBP r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& [k, p] : a[i])
            for (const auto& [j, q] : b[static_cast<size_t>(k)]) {
                BiPoly prod = p * q;
                if (prod.is_zero()) continue;
                auto it = r[i].find(j);
                if (it == r[i].end()) {
                    r[i].emplace(j, prod);
                } else {
                    it->second = it->second + prod;
                    if (it->second.is_zero()) r[i].erase(it);
                }
            }
    return r;
}

// w(w-kappa) R(w) entrywise, as a degree-2 matrix polynomial in w:
// w^2 I + w (-kappa I - P + Q) + kappa P.
std::vector<OpMatrix> cleared_r_poly(const RMatrixFamily& fam) {
    int dim = fam.P.dim();
    OpMatrix id = OpMatrix::identity(dim);
    return {fam.P * fam.kappa, id * (-fam.kappa) - fam.P + fam.Q, id};
}

enum class Slot { s12, s13, s23 };

// Embed the two-factor matrix polynomial into End(C^N (x) C^N (x) C^N) with
// the substitution w -> u-v (s12), u (s13) or v (s23).
SparseBP embed(const std::vector<OpMatrix>& wpoly, int N, Slot slot) {
    BiPoly w_sub[3];
    switch (slot) {
    case Slot::s12: {
        BiPoly w = BiPoly::monomial(1, 0, Rational(1)) + BiPoly::monomial(0, 1, Rational(-1));
        w_sub[0] = BiPoly::constant(Rational(1));
        w_sub[1] = w;
        w_sub[2] = w * w;
        break;
    }
    case Slot::s13:
        for (int k = 0; k <= 2; ++k) w_sub[k] = BiPoly::monomial(k, 0, Rational(1));
        break;
    case Slot::s23:
        for (int k = 0; k <= 2; ++k) w_sub[k] = BiPoly::monomial(0, k, Rational(1));
        break;
    }
    int dim3 = N * N * N;
    SparseBP m(static_cast<size_t>(dim3));
    for (int r2 = 0; r2 < N * N; ++r2)
        for (int c2 = 0; c2 < N * N; ++c2) {
            BiPoly entry;
            for (int k = 0; k <= 2; ++k) {
                const Rational& coef = wpoly[static_cast<size_t>(k)].at(r2, c2);
                if (!coef.is_zero()) entry = entry + w_sub[k] * coef;
            }
            if (entry.is_zero()) continue;
            int ra = r2 / N, rb = r2 % N, ca = c2 / N, cb = c2 % N;
            for (int spec = 0; spec < N; ++spec) {
                int row, col;
                switch (slot) {
                case Slot::s12:
                    row = (ra * N + rb) * N + spec;
                    col = (ca * N + cb) * N + spec;
                    break;
                case Slot::s13:
                    row = (ra * N + spec) * N + rb;
                    col = (ca * N + spec) * N + cb;
                    break;
                default:
                    row = (spec * N + ra) * N + rb;
                    col = (spec * N + ca) * N + cb;
                    break;
                }
                m[static_cast<size_t>(row)].emplace(col, entry);
            }
        }
    return m;
}

std::optional<YbeFailure> sparse_diff(const SparseBP& a, const SparseBP& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        auto ita = a[i].begin();
        auto itb = b[i].begin();
        while (ita != a[i].end() || itb != b[i].end()) {
            int ca = (ita != a[i].end()) ? ita->first : INT32_MAX;
            int cb = (itb != b[i].end()) ? itb->first : INT32_MAX;
            int col = std::min(ca, cb);
            BiPoly pa = (ca == col) ? ita->second : BiPoly();
            BiPoly pb = (cb == col) ? itb->second : BiPoly();
            if (pa != pb) {
                BiPoly d = pa - pb;
                auto mono = d.terms().begin()->first;
                std::ostringstream ms;
                ms << "u^" << mono.first << " v^" << mono.second;
                return YbeFailure{static_cast<int>(i), col, ms.str(),
                                  pa.coeff(mono.first, mono.second).str(),
                                  pb.coeff(mono.first, mono.second).str()};
            }
            if (ca == col) ++ita;
            if (cb == col) ++itb;
        }
    }
    return std::nullopt;
}

} // namespace

YbeResult check_ybe(const RMatrixFamily& fam) {
    int N = fam.idx.N;
    std::vector<OpMatrix> a = cleared_r_poly(fam);
    SparseBP s12 = embed(a, N, Slot::s12);
    SparseBP s13 = embed(a, N, Slot::s13);
    SparseBP s23 = embed(a, N, Slot::s23);
    SparseBP lhs = sparse_mul(sparse_mul(s12, s13), s23);
    SparseBP rhs = sparse_mul(sparse_mul(s23, s13), s12);
    YbeResult res;
    if (auto fail = sparse_diff(lhs, rhs)) {
        res.pass = false;
        res.failure = *fail;
    }
    return res;
}

namespace {

OpMatrix eval_embedded(const RMatrixFamily& fam, const Rational& arg, Slot slot) {
    int N = fam.idx.N;
    OpMatrix m(N * N * N);
    for (int r2 = 0; r2 < N * N; ++r2)
        for (int c2 = 0; c2 < N * N; ++c2) {
            const RatFunc& f = fam.r_entry(r2, c2);
            if (f.is_zero()) continue;
            Rational val = f.eval(arg);
            if (val.is_zero()) continue;
            int ra = r2 / N, rb = r2 % N, ca = c2 / N, cb = c2 % N;
            for (int spec = 0; spec < N; ++spec) {
                int row, col;
                switch (slot) {
                case Slot::s12:
                    row = (ra * N + rb) * N + spec;
                    col = (ca * N + cb) * N + spec;
                    break;
                case Slot::s13:
                    row = (ra * N + spec) * N + rb;
                    col = (ca * N + spec) * N + cb;
                    break;
                default:
                    row = (spec * N + ra) * N + rb;
                    col = (spec * N + ca) * N + cb;
                    break;
                }
                m.at(row, col) = val;
            }
        }
    return m;
}

} // namespace

YbeResult check_ybe_sampled(const RMatrixFamily& fam, std::uint64_t seed, int npoints) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    auto bad = [&](const Rational& x) { return x.is_zero() || x == fam.kappa; };
    YbeResult res;
    for (int t = 0; t < npoints; ++t) {
        Rational u, v;
        do {
            u = Rational(num(rng), den(rng));
            v = Rational(num(rng), den(rng));
        } while (bad(u) || bad(v) || bad(u - v));
        OpMatrix r12 = eval_embedded(fam, u - v, Slot::s12);
        OpMatrix r13 = eval_embedded(fam, u, Slot::s13);
        OpMatrix r23 = eval_embedded(fam, v, Slot::s23);
        OpMatrix lhs = r12 * r13 * r23;
        OpMatrix rhs = r23 * r13 * r12;
        if (lhs != rhs) {
            res.pass = false;
            for (int i = 0; i < lhs.dim() && !res.failure; ++i)
                for (int j = 0; j < lhs.dim() && !res.failure; ++j)
                    if (lhs.at(i, j) != rhs.at(i, j)) {
                        std::ostringstream ms;
                        ms << "u=" << u << " v=" << v;
                        res.failure = YbeFailure{i, j, ms.str(), lhs.at(i, j).str(), rhs.at(i, j).str()};
                    }
            return res;
        }
    }
    return res;
}

StructureResult check_structure(const RMatrixFamily& fam) {
    int N = fam.idx.N;
    OpMatrix id = OpMatrix::identity(N * N);
    if (fam.P * fam.P != id) return {false, "P^2 != 1"};
    if (fam.Q * fam.Q != fam.Q * Rational(N)) return {false, "Q^2 != N*Q"};
    if (fam.P * fam.Q != fam.Q) return {false, "PQ != Q"};
    if (fam.Q * fam.P != fam.Q) return {false, "QP != Q"};
    if (partial_transpose_first(fam.P, fam.idx) != fam.Q) return {false, "Q != P^t"};
    for (int r = 0; r < N * N; ++r)
        for (int c = 0; c < N * N; ++c) {
            const RatFunc& f = fam.r_entry(r, c);
            Rational at_inf;
            if (!f.is_zero() && f.num().degree() >= f.den().degree()) {
                if (f.num().degree() > f.den().degree()) return {false, "R entry grows at infinity"};
                at_inf = f.num().leading() / f.den().leading();
            }
            if (at_inf != ((r == c) ? Rational(1) : Rational()))
                return {false, "R(inf) != 1"};
        }
    return {true, ""};
}

CrossingScalar r_times_r_minus(const RMatrixFamily& fam) {
    int dim = fam.P.dim();
    std::vector<RatFunc> prod(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            RatFunc acc;
            for (int k = 0; k < dim; ++k) {
                const RatFunc& a = fam.r_entry(i, k);
                if (a.is_zero()) continue;
                const RatFunc& b = fam.r_entry(k, j);
                if (b.is_zero()) continue;
                acc = acc + a * b.compose_linear(Rational(-1), Rational(0));
            }
            prod[static_cast<size_t>(i) * dim + j] = acc;
        }
    CrossingScalar out;
    out.value = prod[0];
    for (int i = 0; i < dim && out.scalar; ++i)
        for (int j = 0; j < dim && out.scalar; ++j) {
            const RatFunc& e = prod[static_cast<size_t>(i) * dim + j];
            if (i == j ? (e != out.value) : !e.is_zero()) out.scalar = false;
        }
    return out;
}

} // namespace yso3
