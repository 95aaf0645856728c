// End-to-end tests of the command-line binary: spawns the real executable
// and checks stdout text, JSON validity, and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args)
{
    std::string cmd = std::string(FROBPRIMES_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

} // namespace

TEST_CASE("frobenius subcommand")
{
    RunResult r = run_cli("frobenius 3 166");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "329\n");
}

TEST_CASE("member subcommand")
{
    CHECK(run_cli("member 3 5 7").out == "false\n");
    CHECK(run_cli("member 3 5 8").out == "true\n");
    CHECK(run_cli("member 3 5 -- -4").out == "false\n");
}

TEST_CASE("count emits the documented JSON")
{
    RunResult r = run_cli("count 3 166 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"a\":3,\"b\":166,\"s\":329,\"pi_ab\":13,\"pi_s\":66,"
          "\"ratio\":0.196969696970}\n");

    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["pi_ab"] == 13);
    CHECK(parsed["pi_s"] == 66);

    RunResult oracle = run_cli("count 3 166 --oracle --json");
    CHECK(nlohmann::json::parse(oracle.out)["pi_ab"] == 13);

    RunResult text = run_cli("count 3 5");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "a=3 b=5 s=7 pi_ab=2 pi_s=4 ratio=0.500000000000\n");
}

TEST_CASE("ratio subcommand")
{
    RunResult r = run_cli("ratio 3 166");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.196969696970\n");
}

TEST_CASE("usage and validation errors exit 2")
{
    CHECK(run_cli("count 4 6").exit_code == 2);       // not coprime
    CHECK(run_cli("count 5 3").exit_code == 2);       // bad order
    CHECK(run_cli("count 3").exit_code == 2);         // missing argument
    CHECK(run_cli("--bogus-flag count 3 5").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("verify case 7").exit_code == 2);
    CHECK(run_cli("--sieve-ceiling 20000000000 count 3 5").exit_code == 2);
    CHECK(run_cli("verify pi-li --points 1000000").exit_code == 2);
}

TEST_CASE("resource limits exit 3")
{
    // S is far beyond the default 1e9 ceiling
    CHECK(run_cli("count 100003 100019").exit_code == 3);
    // and permitted once the ceiling is raised (not run: would sieve 1e10)
    CHECK(run_cli("--sieve-ceiling 100 count 3 166").exit_code == 3);
}

TEST_CASE("verify single check, text and json")
{
    RunResult text = run_cli("verify case 1");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("case1") != std::string::npos);
    CHECK(text.out.find("PASS") != std::string::npos);

    RunResult json = run_cli("--format json verify case 5");
    CHECK(json.exit_code == 0);
    auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["check_id"] == "case5");
    CHECK(parsed["pass"] == true);
    CHECK(parsed["relation"] == ">");
    CHECK(parsed["witness"]["a"] == 19);
    CHECK(parsed.contains("threshold"));
    CHECK(parsed.contains("extremal_value"));
    CHECK(parsed.contains("samples_checked"));
    CHECK(parsed.contains("elapsed_ms"));
}

TEST_CASE("verify lemma3 prints two reports and honors --u")
{
    RunResult r = run_cli("--format json verify lemma3 --u 2");
    CHECK(r.exit_code == 0);
    std::size_t newline = r.out.find('\n');
    REQUIRE(newline != std::string::npos);
    auto first = nlohmann::json::parse(r.out.substr(0, newline));
    auto second = nlohmann::json::parse(r.out.substr(newline + 1));
    CHECK(first["check_id"] == "lemma3_small");
    CHECK(second["check_id"] == "lemma3_grid");
    CHECK(second["samples_checked"] == 9000);
}

TEST_CASE("verify csv output")
{
    RunResult r = run_cli("--format csv verify case 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("check_id,pass,relation,threshold,extremal_value,"
                      "witness,samples_checked,elapsed_ms\n", 0) == 0);
    CHECK(r.out.find("case3,true,<,") != std::string::npos);
}

TEST_CASE("verify with explicit pair file")
{
    auto path = std::filesystem::temp_directory_path() / "frobprimes_pairs.csv";
    {
        std::ofstream f(path);
        f << "a,b\n3,5\n3,166\n10,13\n";
    }
    RunResult r = run_cli("--format json verify theorem2 --pairs " + path.string());
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["samples_checked"] == 3);
    std::filesystem::remove(path);
}

TEST_CASE("scan to CSV file")
{
    auto path = std::filesystem::temp_directory_path() / "frobprimes_scan.csv";
    std::filesystem::remove(path);
    RunResult r = run_cli("scan --a-min 3 --a-max 3 --b-max 10 --out " +
                          path.string());
    CHECK(r.exit_code == 0);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header == "a,b,s,pi_ab,pi_s,ratio");
    CHECK(row1 == "3,4,5,1,3,0.333333333333");
    CHECK(row2 == "3,5,7,2,4,0.500000000000");
    std::filesystem::remove(path);
}

TEST_CASE("scan json document")
{
    RunResult r = run_cli("--format json scan --a-min 3 --a-max 4 --b-max 9");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.contains("rows"));
    REQUIRE(parsed.contains("summary"));
    CHECK(parsed["rows"].is_array());
    CHECK(parsed["summary"]["pairs_scanned"] == parsed["rows"].size());
    CHECK(parsed["summary"]["violations"].is_array());
}

TEST_CASE("trend output")
{
    RunResult r = run_cli("trend --a 4 --b-list 5,7,9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("b,ratio,predicted\n", 0) == 0);
    CHECK(r.out.find("0.333333333333") != std::string::npos);

    CHECK(run_cli("trend --a 3 --b-list 6").exit_code == 2);
}
