#include "verify/runner.hpp"

#include "drinfeld/drinfeld.hpp"
#include "gauss/gauss.hpp"
#include "rep/rep.hpp"
#include "rmatrix/rmatrix.hpp"
#include "verify/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace yso3 {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"rmatrix", "rtt",      "unitarity", "gauss",
                                                   "section3", "drinfeld", "roundtrip"};
    return names;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string join_points(const std::vector<Rational>& pts) {
    std::ostringstream os;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ",";
        os << pts[i];
    }
    return os.str();
}

std::string mutation_str(const std::optional<Mutation>& m) {
    if (!m) return "-";
    std::ostringstream os;
    os << m->suite << ":" << m->target << ":" << m->index << ":" << m->delta;
    return os.str();
}

} // namespace

Mutation parse_mutation(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() != 4)
        throw std::invalid_argument("mutation: expected suite:target:index:delta, got '" + text + "'");
    Mutation m;
    m.suite = parts[0];
    m.target = parts[1];
    try {
        size_t used = 0;
        m.index = std::stoi(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("mutation: bad index '" + parts[2] + "'");
    }
    m.delta = Rational::parse(parts[3]);
    if (m.delta.is_zero()) throw std::invalid_argument("mutation: delta must be nonzero");
    return m;
}

namespace {

void mutate_series(OpSeries& s, int index, const Rational& delta) {
    if (index < s.lo() || index > s.valid_order())
        throw std::invalid_argument("mutation: exponent out of series window");
    OpMatrix m = s.coeff(index);
    m.at(0, 0) += delta;
    s.set_coeff(index, m);
}

// Lazily built verification pipeline for one parameter set, with the
// configured mutation applied at the stage owning its target.
class Pipeline {
public:
    Pipeline(const RunConfig& cfg, EvalParams params) : cfg_(cfg), params_(std::move(params)) {}

    const EvalParams& params() const { return params_; }

    const RepT& t() {
        if (!t_) {
            const auto& mut = cfg_.mutation;
            if (mut && mut->suite == "unitarity" && mut->target == "c") {
                t_ = build_with_perturbed_scalar(*mut);
            } else {
                t_ = build_rep(params_);
                if (mut && (mut->suite == "rtt" || mut->suite == "unitarity"))
                    apply_rep_mutation(*t_, *mut);
            }
        }
        return *t_;
    }

    const RepTInv& tinv() {
        if (!tinv_) tinv_ = invert_rep(t());
        return *tinv_;
    }

    const GaussData& gauss() {
        if (!g_) {
            g_ = gauss_decompose(t());
            const auto& mut = cfg_.mutation;
            if (mut && (mut->suite == "gauss" || mut->suite == "section3" ||
                        mut->suite == "roundtrip")) {
                OpSeries* target = g_->series_by_name(mut->target);
                if (!target)
                    throw std::invalid_argument("mutation: unknown gauss target '" + mut->target + "'");
                mutate_series(*target, mut->index, mut->delta);
            }
        }
        return *g_;
    }

    const Currents& currents() {
        if (!cur_) {
            cur_ = currents_from_gauss(gauss());
            const auto& mut = cfg_.mutation;
            if (mut && mut->suite == "drinfeld") {
                OpSeries* target = cur_->series_by_name(mut->target);
                if (!target)
                    throw std::invalid_argument("mutation: unknown drinfeld target '" + mut->target +
                                                "'");
                mutate_series(*target, mut->index, mut->delta);
            }
        }
        return *cur_;
    }

    /// Currents rebuilt at a deeper truncation so every mode referenced by
    /// the mode-relation families is inside validity.
    Currents deep_currents(int order) {
        EvalParams deep = params_;
        deep.order = order;
        Pipeline sub(cfg_, deep);
        return sub.currents();
    }

private:
    void apply_rep_mutation(RepT& t, const Mutation& mut) {
        // Accepts targets "t(i,j)" with labels in {-1,0,1}.
        auto bad = [&]() {
            throw std::invalid_argument("mutation: unknown rep target '" + mut.target + "'");
        };
        if (mut.target.size() < 6 || mut.target.substr(0, 2) != "t(" || mut.target.back() != ')')
            bad();
        auto inner = split(mut.target.substr(2, mut.target.size() - 3), ',');
        if (inner.size() != 2) bad();
        int i, j;
        try {
            i = std::stoi(inner[0]);
            j = std::stoi(inner[1]);
        } catch (const std::exception&) {
            bad();
            return;
        }
        if (i < -1 || i > 1 || j < -1 || j > 1) bad();
        mutate_series(t.at(i, j), mut.index, mut.delta);
    }

    RepT build_with_perturbed_scalar(const Mutation& mut) {
        if (mut.index < 1 || mut.index > params_.order)
            throw std::invalid_argument("mutation: scalar exponent out of range");
        RatSeries c = normalize_scalar(params_.points.front(), params_.order);
        c.set_coeff(mut.index, c.coeff(mut.index) + mut.delta);
        RepT acc = scale_rep(eval_rep_raw(params_.points.front(), params_.order), c);
        for (size_t m = 1; m < params_.points.size(); ++m) {
            const Rational& a = params_.points[m];
            acc = tensor_rep(acc, scale_rep(eval_rep_raw(a, params_.order),
                                            normalize_scalar(a, params_.order)));
        }
        return acc;
    }

    const RunConfig& cfg_;
    EvalParams params_;
    std::optional<RepT> t_;
    std::optional<RepTInv> tinv_;
    std::optional<GaussData> g_;
    std::optional<Currents> cur_;
};

std::string param_string(const EvalParams& p) {
    std::ostringstream os;
    os << "K=" << p.order << " m=" << p.points.size() << " points=" << join_points(p.points);
    return os.str();
}

class Recorder {
public:
    Recorder(Report& report, bool timings) : report_(report), timings_(timings) {}

    void add(const std::string& id, const std::string& params,
             const std::function<CheckOutcome()>& check, const std::string& extra_note = "") {
        CheckRecord rec;
        rec.id = id;
        rec.statement = catalog_entry(id).statement;
        rec.params = params;
        auto start = std::chrono::steady_clock::now();
        CheckOutcome oc;
        try {
            oc = check();
        } catch (const std::domain_error& e) {
            oc = CheckOutcome::fail(std::string("error: ") + e.what());
        }
        if (timings_)
            rec.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                   std::chrono::steady_clock::now() - start)
                                                   .count());
        std::string note = extra_note;
        if (oc.dual_path) {
            if (!note.empty()) note += "; ";
            note += oc.paths_agree ? "oracle=agree" : "oracle=DISAGREE";
        }
        if (!oc.paths_agree && oc.pass) {
            oc.pass = false;
            oc.failure = "verification paths disagree";
        }
        rec.verdict = oc.pass ? "PASS" : "FAIL";
        rec.failure = oc.failure;
        rec.note = note;
        report_.records.push_back(std::move(rec));
    }

    void skip(const std::string& id, const std::string& params, const std::string& reason) {
        CheckRecord rec;
        rec.id = id;
        rec.statement = catalog_entry(id).statement;
        rec.params = params;
        rec.verdict = "SKIP";
        rec.note = reason;
        report_.records.push_back(std::move(rec));
    }

private:
    Report& report_;
    bool timings_;
};

void run_rmatrix(const RunConfig& cfg, Recorder& rec) {
    for (int N : {3, 4, 5}) {
        RMatrixFamily fam = build_r_family(N);
        if (cfg.mutation && cfg.mutation->suite == "rmatrix") {
            OpMatrix* target = nullptr;
            if (cfg.mutation->target == "P") target = &fam.P;
            else if (cfg.mutation->target == "Q") target = &fam.Q;
            else throw std::invalid_argument("mutation: unknown rmatrix target '" +
                                             cfg.mutation->target + "'");
            int dim = target->dim();
            int idx = cfg.mutation->index;
            if (idx < 0 || idx >= dim * dim)
                throw std::invalid_argument("mutation: rmatrix entry index out of range");
            target->at(idx / dim, idx % dim) += cfg.mutation->delta;
            // R is rebuilt from the perturbed operators so every structural
            // consequence sees the same mutation.
            Poly u = Poly::x();
            Poly umk = u - Poly(fam.kappa);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    RatFunc entry((r == c) ? RatFunc(Rational(1)) : RatFunc());
                    if (!fam.P.at(r, c).is_zero()) entry = entry - RatFunc(Poly(fam.P.at(r, c)), u);
                    if (!fam.Q.at(r, c).is_zero()) entry = entry + RatFunc(Poly(fam.Q.at(r, c)), umk);
                    fam.r_entry(r, c) = entry;
                }
        }
        std::string params = "N=" + std::to_string(N);
        rec.add("ybe", params, [&]() {
            CheckOutcome oc;
            YbeResult poly = check_ybe(fam);
            if (!poly.pass) {
                std::ostringstream os;
                os << "entry=(" << poly.failure->row << "," << poly.failure->col << ") "
                   << poly.failure->monomial << " lhs=" << poly.failure->lhs
                   << " rhs=" << poly.failure->rhs;
                oc = CheckOutcome::fail(os.str());
            }
            YbeResult sampled = check_ybe_sampled(fam, cfg.seed, 5);
            oc.dual_path = true;
            oc.paths_agree = (poly.pass == sampled.pass);
            return oc;
        });
        std::string note = "kappa=" + fam.kappa.str();
        if (N == 3) {
            CrossingScalar cs = r_times_r_minus(fam);
            note = cs.scalar ? "R(u)R(-u)=(" + cs.value.str() + ")*1"
                             : std::string("R(u)R(-u) not scalar");
        }
        rec.add("rmatrix-structure", params, [&]() {
            StructureResult st = check_structure(fam);
            return st.pass ? CheckOutcome::ok() : CheckOutcome::fail(st.detail);
        }, note);
    }
}

void run_rep_suites(const RunConfig& cfg, Recorder& rec, Pipeline& pipe,
                    const std::vector<std::string>& selected) {
    auto want = [&](const char* s) {
        return std::find(selected.begin(), selected.end(), s) != selected.end();
    };
    std::string params = param_string(pipe.params());

    if (want("rtt")) {
        rec.add("rtt", params, [&]() { return check_rtt(pipe.t()); });
        rec.add("t-generating-relation", params, [&]() { return check_gen_rel_t(pipe.t()); });
        rec.add("rtt-inverse-form", params,
                [&]() { return check_rtt_inverse_form(pipe.t(), pipe.tinv()); });
        rec.add("tprime-generating-relation", params,
                [&]() { return check_gen_rel_tprime(pipe.t(), pipe.tinv()); });
    }
    if (want("unitarity"))
        rec.add("unitarity", params, [&]() { return check_unitarity(pipe.t()); });
    if (want("gauss"))
        rec.add("gauss-decomposition", params,
                [&]() { return check_gauss_roundtrip(pipe.t(), pipe.gauss()); });
    if (want("section3")) {
        rec.add("k1-inverse-shift", params, [&]() { return check_k1_inverse_shift(pipe.gauss()); });
        rec.add("e01-k1-unitarity", params,
                [&]() { return check_e01_from_unitarity(pipe.gauss()); });
        rec.add("f10-k1-unitarity", params,
                [&]() { return check_f10_from_unitarity(pipe.gauss()); });
        rec.add("k0-inverse-cross", params, [&]() { return check_k0_inverse_cross(pipe.gauss()); });
        rec.add("k-family-relations", params, [&]() { return check_k_family(pipe.gauss()); });
        rec.add("ef-commutator", params, [&]() { return check_ef_commutator(pipe.gauss()); });
        rec.add("ef-reflection", params, [&]() { return check_ef_reflection(pipe.gauss()); });
        rec.add("k0-factorization", params, [&]() {
            CheckOutcome oc = check_k0_factorization(pipe.gauss());
            oc.absorb(check_k_consistency_triangle(pipe.gauss()));
            return oc;
        });
        rec.add("h-anticommutators", params, [&]() { return check_h_anticommutators(pipe.gauss()); });
        rec.add("ee-ff-quadratic", params, [&]() { return check_quadratic_exchange(pipe.gauss()); });
        rec.add("em11-shift-combination", params,
                [&]() { return check_em11_shift_combination(pipe.gauss()); });
        rec.add("em11-from-first-mode", params,
                [&]() { return check_em11_from_first_mode(pipe.gauss()); });
        rec.add("first-mode-shift-identity", params,
                [&]() { return check_first_mode_shift(pipe.gauss()); });
        rec.add("em11-half-square", params, [&]() { return check_em11_half_square(pipe.gauss()); });
        rec.add("f1m1-half-square", params, [&]() { return check_f1m1_half_square(pipe.gauss()); });
    }
    if (want("drinfeld")) {
        rec.add("drinfeld-current-relations", params,
                [&]() { return check_current_relations(pipe.currents()); });
        int deep_order = std::max(cfg.order, 2 * cfg.mode_bound + 1);
        rec.add(
            "drinfeld-mode-relations", params,
            [&]() {
                Currents deep = pipe.deep_currents(deep_order);
                return check_mode_relations(extract_modes(deep), cfg.mode_bound);
            },
            "bound=" + std::to_string(cfg.mode_bound) + " checked at K=" +
                std::to_string(deep_order));
    }
    if (want("roundtrip")) {
        rec.add("realization-roundtrip", params, [&]() {
            CheckOutcome oc = check_inverse_map(pipe.gauss(), pipe.currents());
            oc.absorb(check_generation_roundtrip(pipe.t(), pipe.gauss()));
            return oc;
        });
    }
}

} // namespace

Report run_suites(const RunConfig& cfg) {
    if (cfg.order < 2) throw std::invalid_argument("config: order must be >= 2");
    if (cfg.depth < 1) throw std::invalid_argument("config: depth must be >= 1");
    if (cfg.points.empty()) throw std::invalid_argument("config: at least one evaluation point");
    if (cfg.mode_bound < 0 || cfg.mode_bound > 15)
        throw std::invalid_argument("config: mode bound out of range [0, 15]");
    if (cfg.format != "json" && cfg.format != "text")
        throw std::invalid_argument("config: unknown format '" + cfg.format + "'");

    std::vector<std::string> selected;
    for (const auto& s : cfg.suites) {
        if (s == "all") {
            selected = suite_names();
            break;
        }
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("config: unknown suite '" + s + "'");
        if (std::find(selected.begin(), selected.end(), s) == selected.end()) selected.push_back(s);
    }
    if (cfg.mutation &&
        std::find(suite_names().begin(), suite_names().end(), cfg.mutation->suite) ==
            suite_names().end())
        throw std::invalid_argument("config: unknown mutation suite '" + cfg.mutation->suite + "'");

    std::vector<EvalParams> sets;
    if (static_cast<int>(cfg.points.size()) == cfg.depth) {
        sets.push_back(EvalParams{cfg.points, cfg.order});
    } else if (cfg.depth == 1) {
        for (const auto& p : cfg.points) sets.push_back(EvalParams{{p}, cfg.order});
    } else {
        throw std::invalid_argument(
            "config: points must either match depth or depth must be 1 for per-point runs");
    }

    Report report;
    report.config = cfg;
    Recorder rec(report, cfg.timings);

    bool needs_rep = false;
    for (const auto& s : selected)
        if (s != "rmatrix") needs_rep = true;

    if (std::find(selected.begin(), selected.end(), "rmatrix") != selected.end())
        run_rmatrix(cfg, rec);

    if (needs_rep)
        for (const auto& params : sets) {
            Pipeline pipe(cfg, params);
            run_rep_suites(cfg, rec, pipe, selected);
        }

    std::sort(report.records.begin(), report.records.end(),
              [](const CheckRecord& a, const CheckRecord& b) {
                  return std::tie(a.id, a.params) < std::tie(b.id, b.params);
              });
    for (const auto& r : report.records) {
        ++report.total;
        if (r.verdict == "PASS") ++report.passed;
        else if (r.verdict == "FAIL") ++report.failed;
        else ++report.skipped;
    }
    return report;
}

namespace {

std::string json_escape(const std::string& s) {
    std::ostringstream os;
    for (char c : s) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        case '\r': os << "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                os << buf;
            } else {
                os << c;
            }
        }
    }
    return os.str();
}

} // namespace

std::string Report::render_json() const {
    std::ostringstream os;
    os << "{\n";
    os << "  \"config\": {\"order\": " << config.order << ", \"depth\": " << config.depth
       << ", \"points\": \"" << json_escape(join_points(config.points)) << "\", \"suites\": \"";
    for (size_t i = 0; i < config.suites.size(); ++i)
        os << (i ? "," : "") << json_escape(config.suites[i]);
    os << "\", \"seed\": " << config.seed << ", \"mode_bound\": " << config.mode_bound
       << ", \"mutation\": \"" << json_escape(mutation_str(config.mutation)) << "\"},\n";
    os << "  \"records\": [\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const CheckRecord& r = records[i];
        os << "    {\"id\": \"" << json_escape(r.id) << "\", \"statement\": \""
           << json_escape(r.statement) << "\", \"params\": \"" << json_escape(r.params)
           << "\", \"verdict\": \"" << r.verdict << "\", \"failure\": \"" << json_escape(r.failure)
           << "\", \"note\": \"" << json_escape(r.note) << "\", \"elapsed_ms\": " << r.elapsed_ms
           << "}" << (i + 1 < records.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"summary\": {\"total\": " << total << ", \"passed\": " << passed
       << ", \"failed\": " << failed << ", \"skipped\": " << skipped << "}\n";
    os << "}\n";
    return os.str();
}

std::string Report::render_text() const {
    std::ostringstream os;
    os << "verification run: order=" << config.order << " depth=" << config.depth
       << " points=" << join_points(config.points) << " seed=" << config.seed
       << " mutation=" << mutation_str(config.mutation) << "\n";
    for (const auto& r : records) {
        os << r.verdict << " " << r.id << " (" << r.params << ")";
        if (!r.failure.empty()) os << " :: " << r.failure;
        if (!r.note.empty()) os << " [" << r.note << "]";
        if (config.timings) os << " {" << r.elapsed_ms << " ms}";
        os << "\n";
    }
    os << "summary: total=" << total << " passed=" << passed << " failed=" << failed
       << " skipped=" << skipped << "\n";
    return os.str();
}

std::string Report::render(const std::string& format) const {
    return format == "text" ? render_text() : render_json();
}

} // namespace yso3
