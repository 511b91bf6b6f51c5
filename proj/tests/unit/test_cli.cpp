#include "cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sc::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "strongcoupling");
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::string(P_tmpdir) + "/sc_cli_test_" + name); }

}  // namespace

TEST_CASE("scan-phase reports the exact order-two crossings")
{
    Result r = run_cli({"scan-phase", "--order", "2", "--t", "1/10", "--U", "7", "--cells", "3x3", "--json", "-"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("\"exact\": \"-1/175\"") != std::string::npos);
    CHECK(r.out.find("\"exact\": \"1/175\"") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"realized\"") != std::string::npos);
}

TEST_CASE("derive emits exact coefficients and a match verdict")
{
    Result r = run_cli({"derive", "--model", "one-band-symmetric", "--order", "2", "--json", "-"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("\"verdict\": \"match\"") != std::string::npos);
    CHECK(r.out.find("80*t^4/U^3") != std::string::npos);
    Result zero = run_cli({"derive", "--order", "2", "--set", "t=0", "--json", "-"});
    CHECK(zero.code == exit_ok);
    CHECK(zero.out.find("\"verdict\": \"match\"") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical output")
{
    std::vector<std::string> args{"scan-phase", "--order", "4", "--cells", "3x2", "--json", "-"};
    CHECK(run_cli(args).out == run_cli(args).out);
    std::vector<std::string> d{"derive", "--model", "falicov-kimball", "--order", "2"};
    CHECK(run_cli(d).out == run_cli(d).out);
}

TEST_CASE("exit codes distinguish parse errors, preconditions and failed checks")
{
    CHECK(run_cli({}).code == exit_parse_error);
    CHECK(run_cli({"frobnicate"}).code == exit_parse_error);
    CHECK(run_cli({"scan-phase", "--bogus"}).code == exit_parse_error);
    CHECK(run_cli({"scan-phase", "--t", "0.1.2"}).code == exit_parse_error);
    CHECK(run_cli({"derive", "--set", "q=1"}).code == exit_parse_error);
    CHECK(run_cli({"scan-phase", "--cells", "5x5"}).code == exit_precondition);
    CHECK(run_cli({"validate-ed", "--t", "1/10"}).code == exit_precondition);
    CHECK(run_cli({"derive", "--order", "3"}).code == exit_precondition);
    // A rectangular-only period bound misses two of the order-four crossings.
    Result rect = run_cli({"scan-phase", "--order", "4", "--cells", "4x4", "--rectangular-only"});
    CHECK(rect.code == exit_check_failed);
    CHECK(rect.out.find("DISCREPANCY") != std::string::npos);
    CHECK(run_cli({"--help"}).code == exit_ok);
}

TEST_CASE("configuration files are read per subcommand and unknown keys are rejected")
{
    const std::string good = temp_path("good.toml"), bad = temp_path("bad.toml"), csv = temp_path("env.csv");
    std::ofstream(good) << "[scan-phase]\norder = 2\nt = \"1/3\"\nU = \"11/2\"\ncells = \"2x2\"\ncsv = \"" << csv << "\"\n";
    std::ofstream(bad) << "[scan-phase]\nordr = 2\n";
    Result r = run_cli({"--config", good, "scan-phase"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("crossings: -8/99 8/99") != std::string::npos);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("h_lo,h_hi", 0) == 0);
    CHECK(run_cli({"--config", bad, "scan-phase"}).code == exit_parse_error);
    std::remove(good.c_str());
    std::remove(bad.c_str());
    std::remove(csv.c_str());
}

TEST_CASE("identities and diagnostics subcommands report their verdicts")
{
    Result id = run_cli({"identities", "--cluster", "bond"});
    CHECK(id.code == exit_ok);
    CHECK(id.out.find("all hold") != std::string::npos);
    Result diag = run_cli({"diagnostics", "--h", "0"});
    CHECK(diag.code == exit_ok);
    CHECK(diag.out.find("\"exact\": \"1/175\"") != std::string::npos);
}
