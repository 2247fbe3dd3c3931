#include "yso3/yso3.h"

#include "verify/catalog.hpp"
#include "verify/runner.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace {

thread_local std::string g_last_error;

int fail(const std::string& msg, int code = YSO3_EINVAL) {
    g_last_error = msg;
    return code;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

struct yso3_config {
    yso3::RunConfig cfg;
};

struct yso3_report {
    yso3::Report report;
    std::string rendered;
};

extern "C" {

yso3_config* yso3_config_new(void) { return new yso3_config(); }

void yso3_config_free(yso3_config* cfg) { delete cfg; }

int yso3_config_set_order(yso3_config* cfg, int order) {
    if (!cfg) return fail("null config");
    cfg->cfg.order = order;
    return YSO3_OK;
}

int yso3_config_set_depth(yso3_config* cfg, int depth) {
    if (!cfg) return fail("null config");
    cfg->cfg.depth = depth;
    return YSO3_OK;
}

int yso3_config_set_points(yso3_config* cfg, const char* csv) {
    if (!cfg || !csv) return fail("null argument");
    try {
        std::vector<yso3::Rational> pts;
        for (const auto& tok : split_csv(csv)) pts.push_back(yso3::Rational::parse(tok));
        cfg->cfg.points = std::move(pts);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return YSO3_OK;
}

int yso3_config_set_suites(yso3_config* cfg, const char* csv) {
    if (!cfg || !csv) return fail("null argument");
    std::vector<std::string> suites;
    for (const auto& tok : split_csv(csv)) {
        std::string t = trim(tok);
        if (!t.empty()) suites.push_back(t);
    }
    if (suites.empty()) return fail("no suites given");
    cfg->cfg.suites = std::move(suites);
    return YSO3_OK;
}

int yso3_config_set_format(yso3_config* cfg, const char* format) {
    if (!cfg || !format) return fail("null argument");
    cfg->cfg.format = format;
    return YSO3_OK;
}

int yso3_config_set_mutation(yso3_config* cfg, const char* spec) {
    if (!cfg) return fail("null config");
    if (!spec || std::string(spec).empty() || std::string(spec) == "-") {
        cfg->cfg.mutation.reset();
        return YSO3_OK;
    }
    try {
        cfg->cfg.mutation = yso3::parse_mutation(spec);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    return YSO3_OK;
}

int yso3_config_set_seed(yso3_config* cfg, unsigned long long seed) {
    if (!cfg) return fail("null config");
    cfg->cfg.seed = seed;
    return YSO3_OK;
}

int yso3_config_set_mode_bound(yso3_config* cfg, int bound) {
    if (!cfg) return fail("null config");
    cfg->cfg.mode_bound = bound;
    return YSO3_OK;
}

int yso3_config_set_timings(yso3_config* cfg, int enabled) {
    if (!cfg) return fail("null config");
    cfg->cfg.timings = (enabled != 0);
    return YSO3_OK;
}

int yso3_config_load_file(yso3_config* cfg, const char* path) {
    if (!cfg || !path) return fail("null argument");
    std::ifstream in(path);
    if (!in) return fail(std::string("cannot open config file '") + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            return fail("config file line " + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
        int rc = YSO3_OK;
        try {
            if (key == "order") rc = yso3_config_set_order(cfg, std::stoi(value));
            else if (key == "depth") rc = yso3_config_set_depth(cfg, std::stoi(value));
            else if (key == "points") rc = yso3_config_set_points(cfg, value.c_str());
            else if (key == "suites") rc = yso3_config_set_suites(cfg, value.c_str());
            else if (key == "format") rc = yso3_config_set_format(cfg, value.c_str());
            else if (key == "mutate") rc = yso3_config_set_mutation(cfg, value.c_str());
            else if (key == "seed") rc = yso3_config_set_seed(cfg, std::stoull(value));
            else if (key == "mode_bound") rc = yso3_config_set_mode_bound(cfg, std::stoi(value));
            else if (key == "timings") rc = yso3_config_set_timings(cfg, value == "1" || value == "true");
            else return fail("config file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const std::exception& e) {
            return fail("config file line " + std::to_string(lineno) + ": " + e.what());
        }
        if (rc != YSO3_OK) return rc;
    }
    return YSO3_OK;
}

int yso3_run(const yso3_config* cfg, yso3_report** out) {
    if (!cfg || !out) return fail("null argument");
    try {
        auto* rep = new yso3_report{yso3::run_suites(cfg->cfg), {}};
        *out = rep;
        return YSO3_OK;
    } catch (const std::invalid_argument& e) {
        return fail(e.what(), YSO3_EINVAL);
    } catch (const std::exception& e) {
        return fail(e.what(), YSO3_EINTERNAL);
    }
}

void yso3_report_free(yso3_report* report) { delete report; }

int yso3_report_total(const yso3_report* report) { return report ? report->report.total : -1; }
int yso3_report_passed(const yso3_report* report) { return report ? report->report.passed : -1; }
int yso3_report_failed(const yso3_report* report) { return report ? report->report.failed : -1; }
int yso3_report_skipped(const yso3_report* report) { return report ? report->report.skipped : -1; }

const char* yso3_report_render(yso3_report* report, const char* format) {
    if (!report) return nullptr;
    std::string fmt = format ? format : report->report.config.format;
    report->rendered = report->report.render(fmt);
    return report->rendered.c_str();
}

const char* yso3_catalog(void) {
    static const std::string listing = yso3::catalog_listing();
    return listing.c_str();
}

const char* yso3_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
