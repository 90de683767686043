#include <feuler/basis.hpp>
#include <feuler/core.hpp>
#include <feuler/identity_lab.hpp>
#include <feuler/io.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

using namespace feuler;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun feuler_cli(const std::string &args)
{
    const std::string cmd = std::string(FEULER_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun run;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return run;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        run.out.append(buf, got);
    }
    const int status = pclose(pipe);
    run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::string trimmed(std::string s)
{
    while (!s.empty() && s.back() == '\n') {
        s.pop_back();
    }
    return s;
}

class TempDir {
public:
    TempDir()
        : path_(fs::temp_directory_path() /
                ("feuler_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name()))
    {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string &name, const std::string &content) const
    {
        const fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(CliNumber, Goldens)
{
    EXPECT_EQ(trimmed(feuler_cli("number 2").out), "(λ+1)/(λ-1)^2");
    EXPECT_EQ(trimmed(feuler_cli("number 0 --order 5").out), "1");
    EXPECT_EQ(trimmed(feuler_cli("number 1 --order 2").out), "2/(λ-1)");
    EXPECT_EQ(trimmed(feuler_cli("number 1 -r 2 --format latex").out), "\\frac{2}{\\lambda-1}");

    const CliRun j = feuler_cli("number 3 --format json");
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(lrat_from_json(json::parse(j.out)), fe_number(3));
}

TEST(CliPoly, Goldens)
{
    EXPECT_EQ(trimmed(feuler_cli("poly 1 --format latex").out), "x + \\frac{1}{\\lambda-1}");
    EXPECT_EQ(trimmed(feuler_cli("poly 3 --order 0").out), "x^3");
    EXPECT_EQ(trimmed(feuler_cli("poly 0").out), "1");
    EXPECT_EQ(parse_xpoly(trimmed(feuler_cli("poly 5 -r 3").out)), fe_poly_higher(5, 3));
    EXPECT_EQ(xpoly_from_json(json::parse(feuler_cli("poly 4 --format json").out)), fe_poly(4));
}

TEST(CliUsage, ErrorsExitTwo)
{
    EXPECT_EQ(feuler_cli("number -1").code, 2);
    EXPECT_EQ(feuler_cli("number 2 --order 0").code, 2);
    EXPECT_EQ(feuler_cli("poly -3").code, 2);
    EXPECT_EQ(feuler_cli("poly 3 --order -1").code, 2);
    EXPECT_EQ(feuler_cli("number 2 --format yaml").code, 2);
    EXPECT_EQ(feuler_cli("").code, 2);
    EXPECT_EQ(feuler_cli("frobnicate").code, 2);
    EXPECT_EQ(feuler_cli("verify no-such-identity").code, 2);
    EXPECT_EQ(feuler_cli("verify thm2 --max-n -1").code, 2);
    EXPECT_EQ(feuler_cli("--help").code, 0);
}

TEST(CliExpand, Examples)
{
    TempDir dir;
    const std::string x = dir.write("x.json", to_json(XPoly::monomial(1)).dump());

    const CliRun r1 = feuler_cli("expand " + x + " --format json");
    ASSERT_EQ(r1.code, 0);
    const FEExpansion e1 = expansion_from_json(json::parse(r1.out));
    EXPECT_EQ(e1.order, 1u);
    const LRat inv = (LRat(1) - LRat::lambda()).inverse();
    EXPECT_EQ(e1.coeffs, (std::vector<LRat>{inv, LRat(1)}));

    const CliRun r2 = feuler_cli("expand " + x + " --order 2 --format json");
    ASSERT_EQ(r2.code, 0);
    EXPECT_EQ(expansion_from_json(json::parse(r2.out)).coeffs, (std::vector<LRat>{LRat(2) * inv, LRat(1)}));

    EXPECT_EQ(trimmed(feuler_cli("expand " + x + " -r 2").out), "C_0 = -2/(λ-1)\nC_1 = 1");

    const std::string h4 = dir.write("h4.json", to_json(fe_poly(4)).dump());
    const FEExpansion e4 = expansion_from_json(json::parse(feuler_cli("expand " + h4 + " --format json").out));
    EXPECT_EQ(e4.coeffs, (std::vector<LRat>{LRat(0), LRat(0), LRat(0), LRat(0), LRat(1)}));

    // stdin
    const CliRun piped = feuler_cli("expand - --format json < " + x);
    EXPECT_EQ(expansion_from_json(json::parse(piped.out)), e1);
}

TEST(CliExpand, MalformedInputExitsTwo)
{
    TempDir dir;
    EXPECT_EQ(feuler_cli("expand " + dir.write("bad.json", "{not json")).code, 2);
    EXPECT_EQ(feuler_cli("expand " + dir.write("schema.json", R"({"num":["1"]})")).code, 2);
    EXPECT_EQ(feuler_cli("expand " + dir.path("missing.json")).code, 2);
    EXPECT_EQ(feuler_cli("expand " + dir.write("x.json", R"(["0","1"])") + " --order 0").code, 2);
}

TEST(CliVerify, ExitCodesAndJsonLines)
{
    const CliRun ok = feuler_cli("verify thm2 --max-n 10");
    EXPECT_EQ(ok.code, 0);
    std::istringstream lines(ok.out);
    std::string line;
    unsigned count = 0;
    while (std::getline(lines, line)) {
        const json j = json::parse(line);
        EXPECT_EQ(j["id"], "thm2");
        EXPECT_EQ(j["status"], "verified");
        EXPECT_EQ(j["n"], count);
        EXPECT_TRUE(j["corrected_coefficients"].is_null());
        ++count;
    }
    EXPECT_EQ(count, 11u);

    const CliRun bad = feuler_cli("verify thm7-as-printed --max-n 4 --max-r 3");
    EXPECT_EQ(bad.code, 1);
    std::istringstream bad_lines(bad.out);
    ASSERT_TRUE(std::getline(bad_lines, line));
    const json first = json::parse(line);
    EXPECT_EQ(first["status"], "refuted");
    EXPECT_EQ(first["n"], 0);
    EXPECT_EQ(first["r"], 1);
    const XPoly residual = xpoly_from_json(first["residual"]);
    EXPECT_EQ(residual, XPoly(LRat(1) - (LRat(1) - LRat::lambda()).pow(-2)));
    EXPECT_EQ(expansion_from_json(first["corrected_coefficients"]).coeffs, std::vector<LRat>{LRat(1)});

    const CliRun screened = feuler_cli("verify thm6 --max-n 3 --max-r 2 --screen-seed 5 --screen-trials 2");
    EXPECT_EQ(screened.code, 0);
    std::istringstream sl(screened.out);
    while (std::getline(sl, line)) {
        const json j = json::parse(line);
        EXPECT_EQ(j["seed"], 5);
        EXPECT_EQ(j["screen"]["result"], "pass");
    }

    const CliRun text = feuler_cli("verify thm7-as-printed --max-n 1 --max-r 2 --format text");
    EXPECT_EQ(text.code, 1);
    EXPECT_NE(text.out.find("refuted"), std::string::npos);
    EXPECT_NE(text.out.find("residual"), std::string::npos);
}

TEST(CliVerify, AllIsDeterministic)
{
    const CliRun a = feuler_cli("verify all --max-n 8 --max-r 4 --screen-seed 42");
    const CliRun b = feuler_cli("verify all --max-n 8 --max-r 4 --screen-seed 42");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const json doc = json::parse(a.out);
    EXPECT_EQ(doc["header"]["screen"]["seed"], 42);
    EXPECT_EQ(doc["identities"].size(), registry_list().size());
}

TEST(CliReport, RowsVerdictsAndDeterminism)
{
    TempDir dir;
    const std::string first = dir.path("a.json");
    const std::string second = dir.path("b.json");
    ASSERT_EQ(feuler_cli("report -o " + first).code, 0);
    ASSERT_EQ(feuler_cli("report --output " + second).code, 0);
    EXPECT_EQ(read_file(first), read_file(second));

    const json doc = json::parse(read_file(first));
    EXPECT_GE(doc["identities"].size(), 11u);
    std::map<std::string, json> rows;
    for (const auto &row : doc["identities"]) {
        rows[row["id"].get<std::string>()] = row;
    }
    for (const char *id : {"thm2", "thm6", "eq2", "eq5", "eq7", "eq30", "eq32"}) {
        ASSERT_TRUE(rows.count(id)) << id;
        EXPECT_EQ(rows[id]["verdict"], "verified") << id;
        EXPECT_TRUE(rows[id]["first_counterexample"].is_null()) << id;
    }
    const json &t7 = rows["thm7-as-printed"];
    EXPECT_EQ(t7["verdict"], "refuted");
    EXPECT_EQ(xpoly_from_json(t7["first_counterexample"]["residual"]),
              XPoly(LRat(1) - (LRat(1) - LRat::lambda()).pow(-2)));

    const CliRun text = feuler_cli("report --max-n 3 --max-r 2 --format text");
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("thm7-as-printed"), std::string::npos);

    EXPECT_EQ(feuler_cli("report -o " + dir.path("no/such/dir/report.json")).code, 2);
}
