#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hdc/cli.hpp"
#include "hdc/report_io.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = hdc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the metric value") {
    const auto r = run_cli({"eval", "ball:2", "--c", "2", "--x", "0,0", "--y", "0.5,0"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - 0.8813735870195430) <= 1e-9);
}

TEST_CASE("map prints image coordinates and infinity") {
    const auto r = run_cli({"map", "--f", "sigma:0.5,0", "--x", "0.5,0"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,0\n");

    const auto inf = run_cli({"map", "--f", "sigma:0.5,0", "--x", "2,0"});
    CHECK(inf.code == 0);
    CHECK(inf.out == "inf\n");
}

TEST_CASE("ratio emits a JSON sample") {
    const auto r = run_cli({"ratio", "--f", "sigma:0.5,0", "--src", "ball:2", "--dst",
                            "ball:2", "--c", "2", "--x", "0.1,0", "--y", "-0.1,0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ratio\":") != std::string::npos);
    CHECK(r.out.find("\"h_source\":") != std::string::npos);
}

TEST_CASE("estimate output is byte-identical across runs") {
    const std::vector<std::string> args = {
        "estimate", "--f",     "sigma:0.5,0", "--src",  "ball:2", "--dst",
        "ball:2",   "--c",     "2",           "--budget", "2000",  "--seed",
        "11",       "--upper", "1.5",         "--lower",  "0.6666666666666666",
        "--focus",  "0.5,0"};
    const auto r1 = run_cli(args);
    const auto r2 = run_cli(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("\"verdict\":\"pass\"") != std::string::npos);
}

TEST_CASE("sharpness emits t,ratio CSV") {
    const auto r = run_cli({"sharpness", "--kind", "b2h", "--t", "1e-6,0.5"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("t,ratio\n", 0) == 0);
    CHECK(r.out.find("0.5,") != std::string::npos);
}

TEST_CASE("exit codes distinguish parse and domain errors") {
    CHECK(run_cli({"eval", "cube:2", "--x", "0,0", "--y", "0.1,0"}).code == 2);
    CHECK(run_cli({"eval", "ball:2", "--x", "5,0", "--y", "0.1,0"}).code == 3);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"ratio", "--f", "sigma:0.5,0", "--src", "ball:2", "--dst", "ball:2",
                   "--x", "0.1,0", "--y", "0.1,0"})
              .code == 3);
}

TEST_CASE("selftest passes on a small budget") {
    const auto r = run_cli({"selftest", "--seed", "42", "--budget", "1500"});
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest: PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("explore reports the worst triangle slack") {
    const auto r = run_cli({"explore", "--c", "1.0", "--budget", "2000", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("worst triangle slack") != std::string::npos);
}
