#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

// run the CLI binary (path in GRIDTAU_BIN, set by ctest) and capture stdout
int run_cli(const std::string& args, std::string* out) {
    const char* bin = std::getenv("GRIDTAU_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    out->clear();
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out->append(buf, got);
    const int status = pclose(pipe);
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli compute, convert, and exit codes" *
          doctest::skip(std::getenv("GRIDTAU_BIN") == nullptr)) {
    std::string out;
    SUBCASE("compute json") {
        CHECK(run_cli("compute --braid \"2: 1 1 1\" --format json", &out) == 0);
        CHECK(out.find("\"tau_top\": 1") != std::string::npos);
    }
    SUBCASE("qp compute") {
        CHECK(run_cli("compute --qp \"2: (|1)(|1)\" --format json", &out) == 0);
        CHECK(out.find("\"tau_top\": 1") != std::string::npos);
        CHECK(out.find("\"name\": \"quasipositive\"") != std::string::npos);
    }
    SUBCASE("convert emits the grid format") {
        CHECK(run_cli("convert --braid \"1:\"", &out) == 0);
        CHECK(out == "n = 2\nX = 0 1\nO = 1 0\n");
    }
    SUBCASE("invalid input exits 1") {
        CHECK(run_cli("compute --braid \"2: 5\"", &out) == 1);
        CHECK(run_cli("compute --braid \"2: 1\" --qp \"2: (|1)\"", &out) == 1);
    }
    SUBCASE("convert then compute matches compute on the braid") {
        CHECK(run_cli("convert --braid \"2: 1 1 1\"", &out) == 0);
        FILE* f = fopen("roundtrip.grid", "w");
        REQUIRE(f != nullptr);
        fwrite(out.data(), 1, out.size(), f);
        fclose(f);
        std::string via_grid, via_braid;
        CHECK(run_cli("compute --grid roundtrip.grid --format json", &via_grid) == 0);
        CHECK(run_cli("compute --braid \"2: 1 1 1\" --format json", &via_braid) == 0);
        CHECK(via_grid.find("\"tau_top\": 1") != std::string::npos);
        const auto tau_of = [](const std::string& s) {
            const auto at = s.find("\"tau_function\"");
            return s.substr(at, s.find(']', at) - at);
        };
        CHECK(tau_of(via_grid) == tau_of(via_braid));
        remove("roundtrip.grid");
    }
    SUBCASE("thread count does not change the output bytes") {
        std::string a, b2;
        CHECK(run_cli("compute --fixture t2_4 --format json --threads 1", &a) == 0);
        CHECK(run_cli("compute --fixture t2_4 --format json --threads 3", &b2) == 0);
        CHECK(a == b2);
    }
}
