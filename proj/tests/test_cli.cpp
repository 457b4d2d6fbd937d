#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#endif
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string("\"") + OMEGASUM_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
#ifdef WIFEXITED
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
#endif
    return rc;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rq subcommand") {
    REQUIRE(run("rq --nmax 100 --check-direct --out cli_rq.csv") == 0);
    auto text = slurp("cli_rq.csv");
    CHECK(contains(text, "# omegasum "));
    CHECK(contains(text, "# config rq --nmax 100"));
    CHECK(contains(text, "# config_hash "));
    CHECK(contains(text, "N,r_omega,method"));
    CHECK(contains(text, "\n6,1,transform\n"));
    CHECK(contains(text, "\n9,16,transform\n"));
    CHECK(contains(text, "\n10,30,transform\n"));
}

TEST_CASE("sieve subcommand") {
    REQUIRE(run("sieve --limit 1000 --out cli_sieve.csv") == 0);
    auto text = slurp("cli_sieve.csv");
    CHECK(contains(text, "key,value"));
    CHECK(contains(text, "prime_count,168"));
    CHECK(contains(text, "largest_prime,997"));
}

TEST_CASE("scan subcommand") {
    REQUIRE(run("scan --f Omega --kind main --delta 0.25 --farey 10 --x 1000 "
                "--out cli_scan.csv") == 0);
    auto text = slurp("cli_scan.csv");
    CHECK(contains(text, "alpha,a,q,X,abs_S,bound,ratio"));
    CHECK(contains(text, "# config scan"));

    // seeded runs carry the seed in the provenance header
    REQUIRE(run("scan --f Omega --random 20 --seed 7 --x 1000 --out cli_scan_r.csv") == 0);
    CHECK(contains(slurp("cli_scan_r.csv"), "# seed 7"));
}

TEST_CASE("verify subcommand") {
    CHECK(run("verify --quick") == 0);
}

TEST_CASE("invalid configurations exit with code 2") {
    CHECK(run("scan --f Omega --random 10 --x 1000") == 2);          // missing --seed
    CHECK(run("scan --f Omega --x 1000") == 2);                      // no alpha grid
    CHECK(run("scan --f nosuch --farey 5 --x 100") != 0);            // unknown function
    CHECK(run("bounds --kind main --delta 0.75 --x 1000 --q 3") == 2);  // Delta out of range
    CHECK(run("sieve --limit 0") == 2);
    CHECK(run("arcs --n 2000 --coeffs /nonexistent.json") == 2);
}

TEST_CASE("outputs are byte-identical across thread counts") {
    for (const char* sub : {"rq --nmax 400 --out cli_t%d.csv",
                            "scan --f Omega --farey 8 --x 2000 --out cli_t%d.csv"}) {
        std::string ref;
        for (int th : {1, 4, 8}) {
            char args[160];
            std::snprintf(args, sizeof(args), sub, th);
            std::string a = std::string("--threads ") + std::to_string(th) + " " + args;
            REQUIRE(run(a) == 0);
            char path[64];
            std::snprintf(path, sizeof(path), "cli_t%d.csv", th);
            auto text = slurp(path);
            if (th == 1)
                ref = text;
            else
                CHECK(text == ref);
        }
    }
}

TEST_CASE("fit then sseries round trip") {
    REQUIRE(run("fit --limit 200000 --max-modulus 12 --m 1 --points 8 --xmin 1000 "
                "--out cli_fit.json") == 0);
    auto json = slurp("cli_fit.json");
    CHECK(contains(json, "\"M\": 1"));
    CHECK(contains(json, "\"entries\""));

    REQUIRE(run("sseries --n 100000 --m 1 --q 12 --coeffs cli_fit.json "
                "--out cli_ss.csv") == 0);
    auto ss = slurp("cli_ss.csv");
    CHECK(contains(ss, "# tail_estimate "));
    CHECK(contains(ss, "# partial "));
    CHECK(contains(ss, "q,term"));
    CHECK(contains(ss, "\n12,"));

    REQUIRE(run("arcs --n 2000 --b 1.0 --m 1 --nodes 128 --coeffs cli_fit.json "
                "--out cli_arcs.csv") == 0);
    auto arcs = slurp("cli_arcs.csv");
    CHECK(contains(arcs, "key,value"));
    CHECK(contains(arcs, "major_re,"));
    CHECK(contains(arcs, "minor_re,"));
    CHECK(contains(arcs, "r_exact,"));
    CHECK(contains(arcs, "decomposition_residual,"));
}
