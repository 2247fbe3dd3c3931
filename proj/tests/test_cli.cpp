// Exit-code and output contract of the yso3verify binary.
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string out_file = "/tmp/yso3_cli_out.txt";
    std::string cmd = std::string(YSO3_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

} // namespace

TEST_CASE("catalog listing") {
    RunResult r = run_cli("--catalog");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 26);
    CHECK(r.out.find("e_{01}(u)=-e_{-1,0}(u-\\frac{1}{2})") != std::string::npos);
}

TEST_CASE("low order is enough for the rmatrix suite") {
    RunResult r = run_cli("--suites rmatrix --order 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("unknown suite exits 2") {
    CHECK(run_cli("--suites nonsense").exit_code == 2);
    CHECK(run_cli("--points 1/0").exit_code == 2);
    CHECK(run_cli("--suites rmatrix --order 0").exit_code == 2);
}

TEST_CASE("mutation mode exits 1 with failure coordinates") {
    RunResult r = run_cli("--suites gauss --depth 1 --points 0 --order 6 "
                          "--mutate gauss:kMinus1:1:+1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"verdict\": \"FAIL\"") != std::string::npos);
    CHECK(r.out.find("exp=") != std::string::npos);
}

TEST_CASE("deterministic output across runs") {
    std::string args = "--suites rmatrix,unitarity --depth 1 --points 0 --order 4 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("text format") {
    RunResult r = run_cli("--suites unitarity --depth 1 --points 1/3 --order 4 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS unitarity") != std::string::npos);
    CHECK(r.out.find("summary: total=1 passed=1") != std::string::npos);
}

TEST_CASE("timings flag fills elapsed fields without breaking the run") {
    RunResult r = run_cli("--suites rmatrix --order 2 --timings --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" ms}") != std::string::npos);
}

TEST_CASE("config file with flags winning on conflict") {
    std::string path = "/tmp/yso3_cli_cfg.txt";
    {
        std::ofstream f(path);
        f << "suites=rmatrix\norder=3\nformat=text\n";
    }
    RunResult file_only = run_cli("--config " + path);
    CHECK(file_only.exit_code == 0);
    CHECK(file_only.out.find("order=3") != std::string::npos);

    RunResult flag_wins = run_cli("--config " + path + " --order 2");
    CHECK(flag_wins.exit_code == 0);
    CHECK(flag_wins.out.find("order=2") != std::string::npos);
    std::remove(path.c_str());
}
