// Exercises the shared library strictly through the public C header.
#include <doctest.h>

#include "yso3/yso3.h"

#include <cstdio>
#include <cstring>
#include <string>

namespace {

struct ConfigHandle {
    yso3_config* p = yso3_config_new();
    ~ConfigHandle() { yso3_config_free(p); }
};

struct ReportHandle {
    yso3_report* p = nullptr;
    ~ReportHandle() { yso3_report_free(p); }
};

void set_small(yso3_config* cfg) {
    REQUIRE(yso3_config_set_order(cfg, 4) == YSO3_OK);
    REQUIRE(yso3_config_set_depth(cfg, 1) == YSO3_OK);
    REQUIRE(yso3_config_set_points(cfg, "0") == YSO3_OK);
    REQUIRE(yso3_config_set_suites(cfg, "rmatrix") == YSO3_OK);
}

} // namespace

TEST_CASE("run through the C surface") {
    ConfigHandle cfg;
    REQUIRE(cfg.p != nullptr);
    set_small(cfg.p);

    ReportHandle rep;
    REQUIRE(yso3_run(cfg.p, &rep.p) == YSO3_OK);
    CHECK(yso3_report_total(rep.p) == 6);
    CHECK(yso3_report_passed(rep.p) == 6);
    CHECK(yso3_report_failed(rep.p) == 0);
    CHECK(yso3_report_skipped(rep.p) == 0);

    const char* js = yso3_report_render(rep.p, "json");
    REQUIRE(js != nullptr);
    CHECK(std::string(js).find("\"summary\"") != std::string::npos);
    const char* text = yso3_report_render(rep.p, "text");
    REQUIRE(text != nullptr);
    CHECK(std::string(text).find("summary:") != std::string::npos);
}

TEST_CASE("configuration errors surface as EINVAL with a message") {
    ConfigHandle cfg;
    CHECK(yso3_config_set_points(cfg.p, "1/0") == YSO3_EINVAL);
    CHECK(std::strlen(yso3_last_error()) > 0);
    CHECK(yso3_config_set_points(cfg.p, "0,x") == YSO3_EINVAL);
    CHECK(yso3_config_set_mutation(cfg.p, "nonsense") == YSO3_EINVAL);

    set_small(cfg.p);
    REQUIRE(yso3_config_set_suites(cfg.p, "bogus") == YSO3_OK); // validated at run time
    ReportHandle rep;
    CHECK(yso3_run(cfg.p, &rep.p) == YSO3_EINVAL);
    CHECK(std::string(yso3_last_error()).find("unknown suite") != std::string::npos);
}

TEST_CASE("repeated runs render byte-identical reports") {
    ConfigHandle cfg;
    set_small(cfg.p);
    REQUIRE(yso3_config_set_suites(cfg.p, "rmatrix,unitarity") == YSO3_OK);

    std::string first, second;
    {
        ReportHandle rep;
        REQUIRE(yso3_run(cfg.p, &rep.p) == YSO3_OK);
        first = yso3_report_render(rep.p, "json");
    }
    {
        ReportHandle rep;
        REQUIRE(yso3_run(cfg.p, &rep.p) == YSO3_OK);
        second = yso3_report_render(rep.p, "json");
    }
    CHECK(first == second);
}

TEST_CASE("mutation through the C surface yields failures") {
    ConfigHandle cfg;
    set_small(cfg.p);
    REQUIRE(yso3_config_set_order(cfg.p, 6) == YSO3_OK);
    REQUIRE(yso3_config_set_suites(cfg.p, "gauss") == YSO3_OK);
    REQUIRE(yso3_config_set_mutation(cfg.p, "gauss:kMinus1:1:+1") == YSO3_OK);
    ReportHandle rep;
    REQUIRE(yso3_run(cfg.p, &rep.p) == YSO3_OK);
    CHECK(yso3_report_failed(rep.p) > 0);
}

TEST_CASE("catalog is reachable and stable") {
    const char* cat = yso3_catalog();
    REQUIRE(cat != nullptr);
    std::string s(cat);
    CHECK(s.find("[x^+_k,x^-_l]=h_{k+l}") != std::string::npos);
    CHECK(cat == yso3_catalog()); // static storage
}

TEST_CASE("config file loading with setter keys") {
    char path[] = "/tmp/yso3_capi_cfg_XXXXXX";
    int fd = mkstemp(path);
    REQUIRE(fd >= 0);
    FILE* f = fdopen(fd, "w");
    std::fputs("# comment\norder=4\ndepth=1\npoints=0\nsuites=unitarity\nformat=text\n", f);
    std::fclose(f);

    ConfigHandle cfg;
    REQUIRE(yso3_config_load_file(cfg.p, path) == YSO3_OK);
    ReportHandle rep;
    REQUIRE(yso3_run(cfg.p, &rep.p) == YSO3_OK);
    CHECK(yso3_report_total(rep.p) == 1);
    CHECK(yso3_report_failed(rep.p) == 0);
    std::remove(path);

    CHECK(yso3_config_load_file(cfg.p, "/nonexistent/file") == YSO3_EINVAL);
}
