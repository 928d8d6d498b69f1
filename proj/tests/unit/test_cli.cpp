#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "families.hpp"

using namespace qpos;
using namespace qpos::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("qpos_cli_test_" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("parsers")
{
    CHECK(parse_triple("3,1,2") == CoprimeTriple(1, 2, 3));
    CHECK(parse_triple(" 1, 2, 3 ") == CoprimeTriple(1, 2, 3));
    CHECK_THROWS_AS(parse_triple("2,4,6"), UsageError);
    CHECK_THROWS_AS(parse_triple("1,2"), UsageError);
    CHECK_THROWS_AS(parse_triple("1,x,3"), UsageError);
    CHECK(parse_form("1.5,0.5") == ThetaForm(make_rational(3, 2), make_rational(1, 2)));
    CHECK(parse_form("3/2,1/2") == ThetaForm(make_rational(3, 2), make_rational(1, 2)));
    CHECK_THROWS_AS(parse_form("1.25,0"), UsageError);
    CHECK_THROWS_AS(parse_form("1"), UsageError);
    CHECK_THROWS_AS(parse_form("1/2,1/2"), UsageError);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("expected file matches the test fixture and the computed rows")
{
    const auto rows = read_expected(default_expected_path());
    const auto& fixture = testdata::table_rows();
    REQUIRE(rows.size() == fixture.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].a == fixture[i].a);
        CHECK(rows[i].D == fixture[i].D);
        CHECK(rows[i].K == fixture[i].K);
        CHECK(rows[i].N == fixture[i].N);
        const auto computed = compute_row(make_family(CoprimeTriple(rows[i].a, rows[i].b, rows[i].c),
                                                      parse_form(rows[i].A + "," + rows[i].B)));
        CHECK(diff_rows(rows[i], computed).empty());
        CHECK(computed == rows[i]);
    }
    std::size_t total = 0;
    for (const auto& t : canonical_tables()) {
        total += t.triples.size();
    }
    CHECK(total == 17);
}

TEST_CASE("diff_rows reports each differing cell")
{
    TableRow a{1, 2, 3, "3/2", "1/2", "1", 3, {805, 57}};
    TableRow b = a;
    b.N = {806, 57, 9};
    b.D = "8/7";
    const auto d = diff_rows(a, b);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == "D expected 1 got 8/7");
    CHECK(d[1] == "N_1 expected 805 got 806");
    CHECK(d[2] == "N_3 expected - got 9");
    CHECK(format_row_text(a) == "(1,2,3) | 1 | 3 | 805,57");
    CHECK(format_row_csv(a) == "1,2,3,3/2,1/2,1,3,805,57");
}

TEST_CASE("tables output is stable and complete")
{
    const auto r1 = invoke({"tables"});
    const auto r2 = invoke({"tables"});
    CHECK(r1.code == kExitOk);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("The case A=5/2 and B=1/2") != std::string::npos);
    CHECK(r1.out.find("(1,4,7) | 8/7 | 6 | 24257,1365,442,155,126") != std::string::npos);
    CHECK(r1.out.find("17 rows, 0 mismatches") != std::string::npos);

    const auto j = nlohmann::json::parse(invoke({"tables", "--format", "json"}).out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["tables"].size() == 5);
    CHECK(j["tables"][2]["rows"][3]["N"][0] == 38781);

    const auto single = invoke({"tables", "--family", "1,2,3", "--form", "3/2,1/2"});
    CHECK(single.code == kExitOk);
    CHECK(single.out.find("1 | 3 | 805,57") != std::string::npos);
    CHECK(single.out.find("(1,2,5)") == std::string::npos);
}

TEST_CASE("tables with a corrupted expected file")
{
    const auto dir = temp_dir("corrupt");
    const auto path = dir / "bad.csv";
    {
        std::ofstream f(path);
        f << "# one row only, wrong K\n1,2,3,3/2,1/2,1,4,805,57\n";
    }
    const auto r = invoke({"tables", "--expected", path.string()});
    CHECK(r.code == kExitFailure);
    CHECK(r.err.find("K expected 4 got 3") != std::string::npos);
    CHECK(r.err.find("no expected row") != std::string::npos);

    const auto missing = invoke({"tables", "--expected", (dir / "absent.csv").string()});
    CHECK(missing.code == kExitUsage);
}

TEST_CASE("verify")
{
    const auto r = invoke({"verify", "--family", "1,4,5", "--form", "5/2,3/2", "--sample-T", "300"});
    CHECK(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["K"] == 4);
    CHECK(j["per_k"][0]["N"] == 19936);
    CHECK(j["per_k"][1]["N"] == 511);
    CHECK(j["per_k"][2]["N"] == 133);

    const auto t = invoke({"verify", "--family", "1,2,3", "--form", "1,0", "--format", "text", "--sample-T", "300"});
    CHECK(t.code == kExitOk);
    CHECK(t.out.find("N=529") != std::string::npos);
    CHECK(t.out.find("N=64") != std::string::npos);

    // A family outside the tables whose finite check fails.
    const auto f = invoke({"verify", "--family", "1,2,9", "--sample-T", "300"});
    CHECK(f.code == kExitFailure);
    CHECK(nlohmann::json::parse(f.out)["verdict"] == "fail");

    const auto bad = invoke({"verify", "--family", "2,4,6"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("coprime") != std::string::npos);
    CHECK(invoke({"verify"}).code == kExitUsage);
    CHECK(invoke({"verify", "--family", "1,2,3", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("period and scan")
{
    const auto p = invoke({"period", "--triple", "1,3,8"});
    CHECK(p.code == kExitOk);
    CHECK(p.out == "(1,3,8) period 24 verified, D = 17/16\n");
    CHECK(invoke({"period", "--triple", "1,2,3,5"}).out.find("period 30 verified") != std::string::npos);
    CHECK(invoke({"period", "--triple", "1,2"}).code == kExitUsage);

    const auto s = invoke({"scan", "--limit", "30"});
    CHECK(s.code == kExitOk);
    CHECK(s.out.find("nonnegative for every k: (1,2,3) (1,2,5) (1,2,7) (1,3,4) (1,3,5) (1,3,8) (1,4,5) (1,4,7)\n") !=
          std::string::npos);
}

TEST_CASE("output file, output directory from the environment, and config file")
{
    const auto dir = temp_dir("out");
    ::setenv("QPOS_OUTPUT_DIR", dir.string().c_str(), 1);
    const auto r = invoke({"period", "--triple", "1,2,7", "--format", "json", "-o", "d127.json"});
    ::unsetenv("QPOS_OUTPUT_DIR");
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(dir / "d127.json");
    REQUIRE(in);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["D"] == "8/7");

    const auto cfg = dir / "qpos.toml";
    {
        std::ofstream f(cfg);
        f << "[period]\ntriple = \"1,4,5\"\nformat = \"csv\"\n";
    }
    const auto c = invoke({"--config", cfg.string(), "period"});
    CHECK(c.code == kExitOk);
    CHECK(c.out == "a,b,c,period,D\n1,4,5,20,9/8\n");
}
