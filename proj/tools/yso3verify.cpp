// Command-line front end for the yso3 verification engine. Talks to the
// shared library exclusively through the C API.

#include "yso3/yso3.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

int die_config(const char* what) {
    std::cerr << "yso3verify: " << what << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification engine for the RTT and Drinfeld realizations of Y(so3)"};

    std::string suites, points, format, mutate, config_file;
    int order = 0, depth = 0, mode_bound = 0;
    unsigned long long seed = 0;
    bool catalog = false, timings = false;

    app.add_option("--suites", suites,
                   "comma list of rmatrix,rtt,unitarity,gauss,section3,drinfeld,roundtrip,all");
    app.add_option("--order", order, "truncation order K (default 8)");
    app.add_option("--depth", depth, "tensor depth m (default 2)");
    app.add_option("--points", points, "evaluation points, exact rationals (default 0,1/3)");
    app.add_option("--format", format, "report format: json or text (default json)");
    app.add_option("--mutate", mutate, "negative control: suite:target:index:delta");
    app.add_option("--seed", seed, "seed for sampled oracles (default 0)");
    app.add_option("--mode-bound", mode_bound, "max mode index for the mode relations (default 6)");
    app.add_option("--config", config_file, "key=value config file; command-line flags win");
    app.add_flag("--timings", timings, "record elapsed milliseconds per identity");
    app.add_flag("--catalog", catalog, "print the identity catalog and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (catalog) {
        std::fputs(yso3_catalog(), stdout);
        return 0;
    }

    yso3_config* cfg = yso3_config_new();
    if (!cfg) return die_config("out of memory");

    auto guard_rc = [&](int rc) { return rc == YSO3_OK; };
    bool ok = true;
    if (!config_file.empty()) ok = guard_rc(yso3_config_load_file(cfg, config_file.c_str()));
    if (ok && app.count("--order")) ok = guard_rc(yso3_config_set_order(cfg, order));
    if (ok && app.count("--depth")) ok = guard_rc(yso3_config_set_depth(cfg, depth));
    if (ok && app.count("--points")) ok = guard_rc(yso3_config_set_points(cfg, points.c_str()));
    if (ok && app.count("--suites")) ok = guard_rc(yso3_config_set_suites(cfg, suites.c_str()));
    if (ok && app.count("--format")) ok = guard_rc(yso3_config_set_format(cfg, format.c_str()));
    if (ok && app.count("--mutate")) ok = guard_rc(yso3_config_set_mutation(cfg, mutate.c_str()));
    if (ok && app.count("--seed")) ok = guard_rc(yso3_config_set_seed(cfg, seed));
    if (ok && app.count("--mode-bound")) ok = guard_rc(yso3_config_set_mode_bound(cfg, mode_bound));
    if (ok && timings) ok = guard_rc(yso3_config_set_timings(cfg, 1));
    if (!ok) {
        int rc = die_config(yso3_last_error());
        yso3_config_free(cfg);
        return rc;
    }

    yso3_report* report = nullptr;
    int rc = yso3_run(cfg, &report);
    if (rc != YSO3_OK) {
        int code = die_config(yso3_last_error());
        yso3_config_free(cfg);
        return code;
    }

    const char* rendered = yso3_report_render(report, nullptr);
    if (rendered) std::fputs(rendered, stdout);
    int failed = yso3_report_failed(report);

    yso3_report_free(report);
    yso3_config_free(cfg);
    return failed > 0 ? 1 : 0;
}
