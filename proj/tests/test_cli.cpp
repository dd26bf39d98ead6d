#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DICKMAN_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("constants subcommand emits the specified CSV") {
    RunResult r = run_cli("constants --kmax 8 --method zeta");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "k,C_k,D_k,method,err_bound"));
    CHECK(contains(r.out, "zeta_series"));
    // C_2 = -0.8224670033... appears in the table
    CHECK(contains(r.out, "-8.2246703342411321"));
}

TEST_CASE("rho subcommand value 1 - ln 2") {
    RunResult r = run_cli("rho --u 2 --method steps");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "u,rho,method"));
    CHECK(contains(r.out, "3.068528194400546905"));
}

TEST_CASE("expand emits a JSON array of reports") {
    RunResult r = run_cli("expand --k 2 --grid 10:10000:4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"data\": ["));
    CHECK(contains(r.out, "\"scaled_error\""));
    CHECK(contains(r.out, "\"k\": 2"));
}

TEST_CASE("outputs are deterministic across runs") {
    RunResult a = run_cli("constants --kmax 6 --method zeta");
    RunResult b = run_cli("constants --kmax 6 --method zeta");
    CHECK(a.out == b.out);
    RunResult c = run_cli("sieve --x 100000 --u 2");
    RunResult d = run_cli("sieve --x 100000 --u 2");
    CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit 1, computation errors exit 2") {
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("constants --method bogus").exit_code == 1);
    CHECK(run_cli("sieve --x 100 --u 10").exit_code == 2);   // y < 2
    CHECK(run_cli("polylog --k 5 --t 0.05 --method recursion --budget 10").exit_code == 2);
}

TEST_CASE("spline persistence through the CLI") {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/dickman_cli_spline.txt";
    RunResult save = run_cli("rho --u 3 --umax 5 --save-spline " + path);
    CHECK(save.exit_code == 0);
    std::ifstream in(path);
    std::string head;
    std::getline(in, head);
    CHECK(head == "RHOSPLINE v1");
    RunResult load = run_cli("rho --u 3 --load-spline " + path);
    CHECK(load.exit_code == 0);
    CHECK(contains(load.out, "4.860838829113"));
    std::remove(path.c_str());
}

TEST_CASE("output lands in --output files") {
    std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                       "/dickman_cli_out.csv";
    RunResult r = run_cli("ik --k 2 --u 3 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(text, "k,u,value"));
    CHECK(contains(text, "2.944413539184825166"));
    std::remove(path.c_str());
}

TEST_CASE("fast profile runs and tags its output") {
    RunResult r = run_cli("rho --u 2.5 --method steps --fast");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "precision=fast"));
}

TEST_CASE("DICKMAN_MAX_X guards the sieve") {
    std::string cmd = "DICKMAN_MAX_X=50 " + std::string(DICKMAN_CLI_PATH) +
                      " sieve --x 100 --u 2 >/dev/null 2>&1; echo $?";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[16] = {};
    REQUIRE(fgets(buf, sizeof buf, pipe) != nullptr);
    pclose(pipe);
    CHECK(std::string(buf).rfind("2", 0) == 0);
}

TEST_CASE("verify --fast passes end to end" * doctest::timeout(900)) {
    RunResult r = run_cli("verify --fast --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verify: all invariants hold"));
    CHECK(!contains(r.out, "FAIL"));
}
