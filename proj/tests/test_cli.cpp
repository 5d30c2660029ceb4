#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

/// Run the CLI through the shell; stderr is dropped so expected failures
/// don't pollute the test log.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(HERSCHEL_CLI_PATH) + " " + args +
                            " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pinned example invocations") {
    RunResult bern = run_cli("bernoulli 12");
    CHECK(bern.exit_code == 0);
    CHECK(bern.out == "-691/2730\n");

    RunResult eul = run_cli("eulerian 3 --format csv");
    CHECK(eul.exit_code == 0);
    CHECK(eul.out == "n,c1,c2,c3\n3,1,4,1\n");

    RunResult li = run_cli("polylog --s 2 --x -1");
    CHECK(li.exit_code == 0);
    CHECK(li.out.substr(0, 16) == "-0.8224670334241");
    CHECK(li.out.back() == '\n');
    CHECK(std::abs(std::stod(li.out) + kPi * kPi / 12.0) <= 1e-11);
}

TEST_CASE("plain outputs") {
    CHECK(run_cli("stirling2 10 5").out == "42525\n");
    CHECK(run_cli("euler-number 4").out == "5\n");
    CHECK(run_cli("genocchi 8").out == "17\n");
    CHECK(run_cli("euler-poly 3").out == "1/4 - 3/2*x^2 + x^3\n");
    CHECK(run_cli("euler-poly 3 --at 1/2").out == "0\n");
    CHECK(run_cli("eulerian 3").out == "lambda + 4*lambda^2 + lambda^3\n");
    CHECK(run_cli("eulerian 3 --at 2").out == "26\n");
    CHECK(run_cli("carlitz-h 2 --at 2").out == "3\n");
    CHECK(run_cli("diff-table 3").out == "0: 1\n1: 0 1\n2: 0 1 2\n3: 0 1 6 6\n");
}

TEST_CASE("csv and json outputs") {
    CHECK(run_cli("bernoulli 12 --format csv").out == "n,value\n12,-691/2730\n");
    CHECK(run_cli("stirling2 4 2 --format csv").out == "n,j,value\n4,2,7\n");
    CHECK(run_cli("euler-poly 3 --format csv").out == "n,c0,c1,c2,c3\n3,1/4,0,-3/2,1\n");

    RunResult bj = run_cli("bernoulli 12 --format json");
    CHECK(bj.exit_code == 0);
    CHECK(contains(bj.out, "\"command\":\"bernoulli\""));
    CHECK(contains(bj.out, "\"result\":\"-691/2730\""));

    RunResult pj = run_cli("polylog --s 2 --x 0.5 --format json");
    CHECK(pj.exit_code == 0);
    for (const char* key : {"\"command\":\"polylog\"", "\"inputs\"", "\"result\"",
                            "\"error_estimate\"", "\"terms_used\"", "\"status\":\"converged\""}) {
        CHECK(contains(pj.out, key));
    }

    RunResult pc = run_cli("polylog --s 1+1i --x 0.3+0.4i --format csv");
    CHECK(pc.exit_code == 0);
    CHECK(contains(pc.out, "s,x,value,error_estimate,terms_used,status"));
    CHECK(contains(pc.out, "converged"));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate 3").exit_code == 1);
    CHECK(run_cli("bernoulli").exit_code == 1);
    CHECK(run_cli("bernoulli 12 --format yaml").exit_code == 1);
    CHECK(run_cli("carlitz-h 3").exit_code == 1);
    CHECK(run_cli("euler-poly 3 --at 1/0").exit_code == 1);
    CHECK(run_cli("polylog --s 2 --x nonsense").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("domain errors exit 2") {
    CHECK(run_cli("genocchi 0").exit_code == 2);
    CHECK(run_cli("carlitz-h 3 --at 1").exit_code == 2);
    CHECK(run_cli("carlitz-h 3 --at 0").exit_code == 2);
    CHECK(run_cli("polylog --s 2 --x 1").exit_code == 2);
    CHECK(run_cli("polylog --s 2 --x 1.5").exit_code == 2);
}

TEST_CASE("convergence failures exit 3") {
    RunResult guard = run_cli("polylog --s 2 --x 0.999");
    CHECK(guard.exit_code == 3);
    CHECK(guard.out.empty());  // no value fabricated

    RunResult trunc = run_cli("polylog --s 2 --x -0.9 --max-terms 4");
    CHECK(trunc.exit_code == 3);

    RunResult guard_json = run_cli("polylog --s 2 --x 0.999 --format json");
    CHECK(guard_json.exit_code == 3);
    CHECK(contains(guard_json.out, "\"result\":null"));
    CHECK(contains(guard_json.out, "\"status\":\"outside_guard\""));
}

TEST_CASE("table cap environment variable") {
    CHECK(run_cli("diff-table 10", "HERSCHEL_TABLE_CAP=10 ").exit_code == 0);
    CHECK(run_cli("diff-table 11", "HERSCHEL_TABLE_CAP=10 ").exit_code == 2);
    CHECK(run_cli("bernoulli 2", "HERSCHEL_TABLE_CAP=abc ").exit_code == 1);
}

TEST_CASE("selfcheck passes") {
    RunResult self = run_cli("selfcheck");
    CHECK(self.exit_code == 0);
    CHECK(contains(self.out, "ok - transform-matches-composition-random"));
    CHECK(!contains(self.out, "FAIL"));
}

}  // TEST_SUITE
