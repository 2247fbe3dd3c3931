#pragma once

#include "exact/biseries.hpp"
#include "exact/series.hpp"
#include "verify/biidentity.hpp"

#include <sstream>
#include <string>

namespace yso3 {

/// Uniform result of one identity check: verdict plus, on failure, the
/// rendered first-failure coordinates. dual_path marks checks that also ran
/// the geometric-expansion oracle; paths_agree compares its verdict to the
/// main (cleared) one.
struct CheckOutcome {
    bool pass = true;
    std::string failure;
    bool dual_path = false;
    bool paths_agree = true;

    static CheckOutcome ok() { return {}; }
    static CheckOutcome fail(std::string where) { return {false, std::move(where), false, true}; }

    void absorb(const CheckOutcome& o) {
        if (pass && !o.pass) {
            pass = false;
            failure = o.failure;
        }
        dual_path = dual_path || o.dual_path;
        paths_agree = paths_agree && o.paths_agree;
    }
};

inline std::string render_bi_mismatch(const BiMismatch& m) {
    std::ostringstream os;
    os << "exp=(" << m.r << "," << m.s << ") entry=(" << m.row << "," << m.col << ") lhs=" << m.lhs
       << " rhs=" << m.rhs;
    return os.str();
}

inline std::string render_series_mismatch(const SeriesMismatch& m) {
    std::ostringstream os;
    os << "exp=" << m.exponent << " entry=(" << m.row << "," << m.col << ") lhs=" << m.lhs
       << " rhs=" << m.rhs;
    return os.str();
}

inline CheckOutcome outcome_from_verdict(const BiVerdict& v, const std::string& where_prefix) {
    CheckOutcome out;
    out.dual_path = true;
    out.paths_agree = v.paths_agree();
    if (!v.pass()) {
        out.pass = false;
        std::ostringstream os;
        os << where_prefix;
        if (v.cleared.vacuous)
            os << "empty comparison window";
        else if (v.cleared.fail)
            os << render_bi_mismatch(*v.cleared.fail);
        out.failure = os.str();
    }
    return out;
}

/// Coefficientwise equality of two univariate operator series.
inline CheckOutcome outcome_series_equal(const OpSeries& a, const OpSeries& b,
                                         const std::string& where_prefix) {
    if (auto mm = series_mismatch(a, b))
        return CheckOutcome::fail(where_prefix + render_series_mismatch(*mm));
    return CheckOutcome::ok();
}

} // namespace yso3
