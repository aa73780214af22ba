#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <widthlab/varifold.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef WIDTHLAB_CLI_PATH
#error "WIDTHLAB_CLI_PATH must point at the command line binary"
#endif

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    const std::string capture = "/tmp/widthlab_cli_test_output.txt";
    const std::string cmd =
        std::string(WIDTHLAB_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
    const int rc = std::system(cmd.c_str());
    if (output) *output = slurp(capture);
    std::remove(capture.c_str());
#ifdef _WIN32
    return rc;
#else
    return (rc >= 0 && (rc & 0x7f) == 0) ? ((rc >> 8) & 0xff) : -1;
#endif
}

} // namespace

TEST_CASE("--list names every suite") {
    std::string out;
    CHECK(run_cli("--list", &out) == 0);
    for (const char* name : {"widths", "comparison", "sweepout-1d", "brendle",
                             "varifold", "stability", "isoperimetric"}) {
        CHECK(out.find(name) != std::string::npos);
    }
    CHECK(out.find("equatorial-disk") != std::string::npos);
}

TEST_CASE("--help and usage errors") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("--no-such-flag") == 2);
    std::string out;
    CHECK(run_cli("--suite no-such-suite", &out) == 2);
    CHECK(run_cli("", &out) == 2); // --suite is required
}

TEST_CASE("a suite run writes a structured report") {
    const std::string report = "/tmp/widthlab_cli_test_report.json";
    std::string out;
    const int rc = run_cli("--suite widths --out " + report, &out);
    CHECK(rc == 0);
    const std::string text = slurp(report);
    std::remove(report.c_str());
    CHECK(text.find("\"suite\"") != std::string::npos);
    CHECK(text.find("widths") != std::string::npos);
    CHECK(text.find("\"checks\"") != std::string::npos);
    CHECK(text.find("\"pass\": false") == std::string::npos);
}

TEST_CASE("fixture export produces a loadable varifold") {
    const std::string path = "/tmp/widthlab_cli_test_fixture.jsonl";
    std::string out;
    CHECK(run_cli("--export-fixture equatorial-disk --out " + path, &out) == 0);
    const auto V = widthlab::from_jsonl(slurp(path));
    std::remove(path.c_str());
    CHECK(V.k == 2);
    CHECK(widthlab::mass(V) == doctest::Approx(3.14159265358979324).epsilon(1e-10));
}
