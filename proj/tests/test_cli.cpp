#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "farkas/cli.hpp"
#include "farkas/config.hpp"
#include "farkas/report.hpp"

using namespace farkas;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "farkas");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("farkas_test_" + std::to_string(::getpid())))
    {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

const char* kValidConfig = R"({
  "p": 37,
  "chi": "quartic-i",
  "terms": [
    {"A": "1/1,0/1", "B": 1, "C": 34},
    {"A": "2/1,0/1", "B": 2, "C": 17},
    {"A": "17/1,0/1", "B": 17, "C": 2},
    {"A": "34/1,0/1", "B": 34, "C": 1}
  ],
  "rhs": {"kind": "sigma_prime", "coefficients": ["18/1,0/1"]}
}
)";

std::string config_error(const std::string& text)
{
    try {
        parse_identity_config(text, "cfg.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(ReportJson, RoundTrip)
{
    std::vector<VerificationReport> reports{
        verify_id1(5, 100),
        verify_id1(29, 10),
        verify_id2(37, CharacterSelector::quartic_minus_i, 5),
        verify_farkas(20),
    };
    for (const auto& r : reports) {
        json j = report_to_json(r);
        VerificationReport back = report_from_json(json::parse(j.dump()));
        EXPECT_EQ(back, r) << j.dump();
    }
    json fail = report_to_json(reports[1]);
    EXPECT_EQ(fail["outcome"], "fail");
    EXPECT_TRUE(fail.contains("first_failure"));
    EXPECT_TRUE(fail["first_failure"]["lhs"].is_string());
    EXPECT_FALSE(report_to_json(reports[0]).contains("first_failure"));
}

TEST(ReportJson, RejectsSchemaErrors)
{
    EXPECT_THROW(report_from_json(json::parse(R"({"command":"verify"})")), std::invalid_argument);
    json j = report_to_json(verify_id1(5, 10));
    j["outcome"] = "maybe";
    EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(AsymptCsv, HeaderAndExactCells)
{
    AsymptoticReport r = asymptotic_report(quartic_pair(29).first, IdentityKind::conv, 60);
    std::string csv = asymptotic_to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,kron,lhs,rhs,ratio,ratio_dec");
    EXPECT_EQ(csv.find("\n29,"), std::string::npos);
    EXPECT_EQ(csv.find("\n58,"), std::string::npos);
    EXPECT_NE(csv.find("\n30,"), std::string::npos);

    std::string five = asymptotic_to_csv(asymptotic_report(quartic_pair(5).first, IdentityKind::conv, 50));
    std::istringstream lines(five);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        EXPECT_NE(line.find(",3/5,0.600000000000"), std::string::npos) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 40);
}

TEST(DecimalString, GaussianForm)
{
    EXPECT_EQ(decimal_string(GaussianRational(Rational(1, 3), Rational(-1, 2))), "0.333333333333-0.500000000000i");
    EXPECT_EQ(exact_string(GaussianRational(Rational(-4, 10))), "-2/5");
}

TEST(Config, ParsesValidFile)
{
    ConfiguredIdentity cfg = parse_identity_config(kValidConfig);
    ConfiguredIdentity want = p37_identity(2, 17);
    EXPECT_EQ(cfg.p, 37u);
    ASSERT_EQ(cfg.terms.size(), want.terms.size());
    for (std::size_t i = 0; i < cfg.terms.size(); ++i) {
        EXPECT_EQ(cfg.terms[i].a, want.terms[i].a);
        EXPECT_EQ(cfg.terms[i].b, want.terms[i].b);
        EXPECT_EQ(cfg.terms[i].c, want.terms[i].c);
    }
    EXPECT_EQ(cfg.rhs, want.rhs);
}

TEST(Config, SerializeParseRoundTrip)
{
    for (u64 p1 : {2u, 5u})
        for (u64 p2 : {17u, 19u}) {
            ConfiguredIdentity cfg = p37_identity(p1, p2);
            std::string text = identity_config_to_string(cfg);
            ConfiguredIdentity back = parse_identity_config(text);
            EXPECT_EQ(identity_config_to_string(back), text);
        }
}

TEST(Config, ShippedFilesMatchBuiltIns)
{
    for (u64 p1 : {2u, 5u})
        for (u64 p2 : {17u, 19u}) {
            fs::path file = fs::path(FARKAS_DATA_DIR) / ("p37_" + std::to_string(p1) + "_" + std::to_string(p2) + ".json");
            ConfiguredIdentity loaded = load_identity_config(file);
            EXPECT_EQ(identity_config_to_string(loaded), identity_config_to_string(p37_identity(p1, p2))) << file;
        }
}

TEST(Config, DiagnosticsCarryLocation)
{
    std::string syntax = config_error("{\n  \"p\": 37,\n  \"terms\": [ oops ]\n}\n");
    EXPECT_NE(syntax.find("cfg.json:3:"), std::string::npos) << syntax;

    std::string bad_b = kValidConfig;
    bad_b.replace(bad_b.find("\"B\": 17"), 7, "\"B\": 0");
    std::string e1 = config_error(bad_b);
    EXPECT_NE(e1.find("terms[2].B"), std::string::npos) << e1;

    std::string bad_a = kValidConfig;
    bad_a.replace(bad_a.find("\"2/1,0/1\""), 9, "\"two\"");
    std::string e2 = config_error(bad_a);
    EXPECT_NE(e2.find("terms[1].A"), std::string::npos) << e2;

    std::string bad_kind = kValidConfig;
    bad_kind.replace(bad_kind.find("sigma_prime"), 11, "sigma_zero");
    EXPECT_NE(config_error(bad_kind).find("rhs.kind"), std::string::npos);

    std::string missing = kValidConfig;
    missing.replace(missing.find("\"p\": 37,"), 8, "");
    EXPECT_NE(config_error(missing).find("'p'"), std::string::npos);

    std::string wrong_count = kValidConfig;
    wrong_count.replace(wrong_count.find("sigma_prime"), 11, "tilde_hat");
    EXPECT_NE(config_error(wrong_count).find("coefficient"), std::string::npos);

    EXPECT_THROW(load_identity_config("/nonexistent/cfg.json"), IoError);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"verify", "--p", "5", "--kind", "conv", "--nmax", "2000"}).code, 0);
    CliRun fail = run({"verify", "--p", "29", "--kind", "conv", "--nmax", "10"});
    EXPECT_EQ(fail.code, 1);
    json j = json::parse(fail.out);
    EXPECT_EQ(j["outcome"], "fail");
    EXPECT_LE(j["first_failure"]["n"].get<int>(), 2);
    EXPECT_EQ(run({"verify", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"verify", "--p", "17"}).code, 2);
    EXPECT_EQ(run({"verify", "--p", "5", "--kind", "cubic"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"poly", "--p", "11"}).code, 0);
    EXPECT_EQ(run({"poly", "--p", "13"}).code, 2);
    EXPECT_EQ(run({"verify", "--p", "5", "--out", "/nonexistent-dir/r.json"}).code, 3);
    EXPECT_EQ(run({"verify", "--config", "/nonexistent-dir/c.json"}).code, 3);
}

TEST(Cli, PolyReport)
{
    CliRun r = run({"poly", "--p", "11"});
    EXPECT_NE(r.out.find("b_0=10 b_1=6"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("divisible_by_xq_plus_1=true"), std::string::npos);
    EXPECT_NE(r.out.find("coprime_with_xq_minus_1=true"), std::string::npos);

    CliRun r59 = run({"poly", "--p", "59", "--format", "json"});
    ASSERT_EQ(r59.code, 0);
    json j = json::parse(r59.out);
    for (const auto& row : j["rows"])
        EXPECT_EQ(row["zero"].get<bool>(), row["k"].get<int>() % 2 == 1);
}

TEST(Cli, SearchOutputs)
{
    CliRun s = run({"search", "--pmax", "1000", "--format", "json", "--no-timing"});
    ASSERT_EQ(s.code, 0) << s.err;
    json j = json::parse(s.out);
    EXPECT_EQ(j["passing"], json::parse("[5,13]"));
    for (const auto& row : j["rows"])
        EXPECT_TRUE(row["obstruction_agrees"].get<bool>()) << row.dump();

    CliRun d = run({"search", "--discriminant"});
    EXPECT_NE(d.out.find("36,20,5,8,yes"), std::string::npos);
    EXPECT_NE(d.out.find("60,12,13,24,yes"), std::string::npos);

    CliRun sp = run({"search", "--safe-primes", "--pmax", "230"});
    EXPECT_EQ(sp.out, "[11,59,83,107,179,227]\n");
}

TEST(Cli, ReportFileIsDeterministicAndAtomic)
{
    TempDir dir;
    fs::path a = dir / "a.json", b = dir / "b.json";
    ASSERT_EQ(run({"verify", "--p", "13", "--kind", "square", "--nmax", "300", "--no-timing", "--out", a.string()}).code,
              0);
    ASSERT_EQ(run({"verify", "--p", "13", "--kind", "square", "--nmax", "300", "--no-timing", "--out", b.string()}).code,
              0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(fs::exists(dir / "a.json.tmp"));
    VerificationReport back = report_from_json(json::parse(slurp(a)));
    EXPECT_EQ(back.elapsed_ms, 0);
    EXPECT_TRUE(back.passed());

    fs::path c = dir / "c.csv";
    EXPECT_EQ(run({"asympt", "--p", "4", "--out", c.string()}).code, 2);
    EXPECT_FALSE(fs::exists(c));
    EXPECT_EQ(run({"asympt", "--p", "29", "--nmax", "100", "--out", c.string()}).code, 0);
    EXPECT_EQ(slurp(c).substr(0, 30), "n,kron,lhs,rhs,ratio,ratio_dec");
}

TEST(Cli, ConfiguredVerifyUsesShippedFile)
{
    fs::path file = fs::path(FARKAS_DATA_DIR) / "p37_2_17.json";
    CliRun r = run({"verify", "--config", file.string(), "--nmax", "200", "--format", "text"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);

    TempDir dir;
    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << "{\"p\": 37, \"terms\": []}";
    CliRun e = run({"verify", "--config", bad.string()});
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.err.find("terms"), std::string::npos);
}
