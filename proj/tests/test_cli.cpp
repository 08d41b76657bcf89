// End-to-end checks of the command line tool: output contracts, exit codes,
// file formats, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#ifndef PARTCERT_CLI_PATH
#error "PARTCERT_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PARTCERT_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("compute") {
    CHECK(run("compute --n 5").out == "7\n");
    CHECK(run("compute --n 0").out == "1\n");
    RunResult series = run("compute --n 100 --method series");
    CHECK(series.exit_code == 0);
    CHECK(series.out == "190569292\n");
    CHECK(run("compute --n 5 --method series").out == "7\n");

    CHECK(run("compute --n -1").exit_code == 2);
    CHECK(run("compute --n notanumber").exit_code == 2);
    CHECK(run("compute").exit_code == 2);
}

TEST_CASE("enclose emits a window containing the exact value") {
    RunResult r = run("enclose --n 50 --terms 3");
    CHECK(r.exit_code == 0);
    std::istringstream ss(r.out);
    double lo = 0, hi = 0;
    ss >> lo >> hi;
    CHECK(lo <= 204226.0);
    CHECK(204226.0 <= hi);
}

TEST_CASE("verify exit codes and expect sets") {
    CHECK(run("verify logconcave --from 1 --to 100 --expect odd-le-25").exit_code == 0);
    CHECK(run("verify logconcave --from 26 --to 100").exit_code == 0);
    CHECK(run("verify logconcave --from 1 --to 100").exit_code == 1);
    CHECK(run("verify logconcave --from 1 --to 100 --expect none").exit_code == 1);
    CHECK(run("verify chen-sharp --from 2 --to 60 --expect "
              "2,4,6,8,10,12,14,16,18,20,22,24,26,28,30,32,34,36,38,40,42,44")
              .exit_code == 0);
    CHECK(run("verify strong --to 60").exit_code == 0);
    CHECK(run("verify chen-refined --from 2 --to 50 --expect 6").exit_code == 0);
    CHECK(run("verify no-such-check --from 1 --to 10").exit_code == 2);
    CHECK(run("verify logconcave --from 1 --to 100 --expect bogus-set").exit_code == 2);
}

TEST_CASE("verify writes a report file") {
    std::string path = "cli_report_test.json";
    RunResult r = run("verify logconcave --from 1 --to 40 --expect odd-le-25 --out " + path);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["check_id"] == "logconcave");
    CHECK(j["violations"].size() == 13);
    CHECK(j["tool_version"].get<std::string>().find("partcert") == 0);
    std::remove(path.c_str());

    CHECK(run("verify logconcave --from 1 --to 40 --out /nonexistent-dir/x.json")
              .exit_code == 3);
}

TEST_CASE("decay CSV: header, rows, determinism") {
    std::string path = "cli_decay_test.csv";
    RunResult r = run("decay --from 2 --to 10 --out " + path);
    CHECK(r.exit_code == 0);
    std::string first = slurp(path);
    std::istringstream ss(first);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "n,d_lo,d_hi,normalized_lo,normalized_hi");
    int rows = 0;
    std::string line;
    while (std::getline(ss, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 9);

    // identical invocation, byte-identical file
    RunResult r2 = run("decay --from 2 --to 10 --out " + path);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(path) == first);
    std::remove(path.c_str());

    // optional L columns
    RunResult r3 = run("decay --from 5 --to 6 --order 1 --out " + path);
    CHECK(r3.exit_code == 0);
    std::string with_l = slurp(path);
    CHECK(with_l.find("n,d_lo,d_hi,normalized_lo,normalized_hi,L_plus,L_minus") == 0);
    std::remove(path.c_str());

    CHECK(run("decay --from 5 --to 2").exit_code == 2);
    CHECK(run("decay --from 2 --to 10 --out /nonexistent-dir/x.csv").exit_code == 3);
}

TEST_CASE("table command and round trip") {
    std::string path = "cli_table_test.txt";
    RunResult r = run("table --to 2 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(slurp(path) == "0 1\n1 1\n2 2\n");
    std::remove(path.c_str());

    RunResult big = run("table --to 600 --out " + path);
    CHECK(big.exit_code == 0);
    std::string content = slurp(path);
    CHECK(content.rfind("600 ") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cache file is reused and extended") {
    std::string path = "cli_cache_test.txt";
    std::remove(path.c_str());
    CHECK(run("--cache " + path + " compute --n 30").exit_code == 0);
    std::string first = slurp(path);
    CHECK(first.rfind("30 5604") != std::string::npos);
    // a smaller query must not shrink the cache
    CHECK(run("--cache " + path + " compute --n 10").exit_code == 0);
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
}
