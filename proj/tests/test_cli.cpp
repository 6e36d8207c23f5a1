#include "support.hpp"

#include "necone/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace necone;
using namespace necone::test;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "necone");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "necone_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, AnalyzeR12)
{
    const CliRun r = run({"analyze", "--input", fixture("p2_r12.json"), "--samples", "200"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["seed"], 0);
    EXPECT_EQ(scalar_from_json(j["main_theorem"]["s"], "s"), make_scalar(-3, 1, 11));
    EXPECT_TRUE(j["main_theorem"]["passed"].get<bool>());
    EXPECT_EQ(j["main_theorem"]["certificates_valid"], 78);
    EXPECT_TRUE(j["strict_inclusion"]["witness_found"].get<bool>());
    EXPECT_EQ(j["segre"]["nu"], 1);
}

TEST(Cli, Deterministic)
{
    const CliRun a = run({"analyze", "-i", fixture("p2_r11.json"), "--samples", "100", "--seed", "5"});
    const CliRun b = run({"analyze", "-i", fixture("p2_r11.json"), "--samples", "100", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ThresholdsUnmet)
{
    const CliRun r = run({"thresholds", "--input", test_data("p2_r1.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("r > K_Y^2 + 1 - (A.K_Y)^2/A^2"), std::string::npos) << r.err;
    const CliRun ok = run({"thresholds", "--input", fixture("p2_r17.json"), "--format", "text"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("conditions.satisfied: true"), std::string::npos);
}

TEST(Cli, SchemaErrors)
{
    Json j = read_json_file(fixture("p2_r12.json"));
    j["gram_Y"] = Json::array({Json::array({"1", "0"}), Json::array({"1", "-1"})});
    j["k_Y"] = Json::array({"-3", "0"});
    j["a_Y"] = Json::array({"1", "0"});
    j["curve_families"] = Json::array({"exceptional"});
    std::ofstream(tmp("bad.json")) << j.dump();
    const CliRun r = run({"analyze", "--input", tmp("bad.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("gram_Y[0][1]"), std::string::npos) << r.err;
    EXPECT_EQ(run({"analyze", "--input", tmp("missing.json")}).code, 1);
    EXPECT_EQ(run({"analyze"}).code, 1);
    EXPECT_EQ(run({"analyze", "-i", fixture("p2_r12.json"), "--format", "xml"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, CertifyAndVerify)
{
    const CliRun c = run({"certify-ray", "-i", fixture("p2_r12.json"), "-o", tmp("bundle.json")});
    ASSERT_EQ(c.code, 0) << c.err;
    const CliRun v = run({"verify", "-i", tmp("bundle.json")});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(Json::parse(v.out)["checked"], 78);

    const CliRun one = run({"certify-ray", "-i", fixture("p2_r12.json"), "--curve", "H-E1-E2", "-o", tmp("one.json")});
    ASSERT_EQ(one.code, 0) << one.err;
    Json j = Json::parse(slurp(tmp("one.json")));
    EXPECT_EQ(j["type"], "ray_containment");
    Json& a = j["alpha"][2]["a"]["a"];
    a = to_string(Rational(parse_rational(a.get<std::string>()) + 1));
    std::ofstream(tmp("tampered.json")) << j.dump();
    const CliRun t = run({"verify", "-i", tmp("tampered.json")});
    EXPECT_EQ(t.code, 3);
    EXPECT_NE(t.err.find("alpha_sq_zero violated"), std::string::npos) << t.err;

    const std::string text = slurp(tmp("one.json"));
    std::ofstream(tmp("truncated.json")) << text.substr(0, text.size() / 2);
    EXPECT_EQ(run({"verify", "-i", tmp("truncated.json")}).code, 1);
    Json u = Json::parse(text);
    u["type"] = "unknown";
    std::ofstream(tmp("unknown.json")) << u.dump();
    EXPECT_EQ(run({"verify", "-i", tmp("unknown.json")}).code, 1);
    EXPECT_EQ(run({"certify-ray", "-i", fixture("p2_r12.json"), "--curve", "nope"}).code, 1);
}

TEST(Cli, DeltaCapOverride)
{
    ::setenv("NECONE_DELTA_CAP", "1/1000", 1);
    const CliRun c = run({"certify-ray", "-i", fixture("p2_r12.json"), "--curve", "E1", "-o", tmp("ovr.json")});
    ::unsetenv("NECONE_DELTA_CAP");
    ASSERT_EQ(c.code, 0) << c.err;
    const Json j = Json::parse(slurp(tmp("ovr.json")));
    EXPECT_TRUE(j["delta_overridden"].get<bool>());
    EXPECT_EQ(j["delta"], "1/1000");
    const CliRun v = run({"verify", "-i", tmp("ovr.json")});
    EXPECT_EQ(v.code, 0);
    EXPECT_FALSE(Json::parse(v.out)["certified"].get<bool>());
    EXPECT_NE(v.err.find("non-certified"), std::string::npos);
}

TEST(Cli, Zariski)
{
    const CliRun d = run({"zariski", "-i", fixture("p2_r12.json"), "--divisor", "1,1,1,1,0,0,0,0,0,0,0,0,0", "-o",
                       tmp("z.json")});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(run({"verify", "-i", tmp("z.json")}).code, 0);
    const CliRun l = run({"zariski", "-i", fixture("p2_r12.json"), "--samples", "50"});
    EXPECT_EQ(l.code, 0) << l.err;
    EXPECT_TRUE(Json::parse(l.out)["passed"].get<bool>());
    EXPECT_EQ(run({"zariski", "-i", fixture("p2_r12.json"), "--divisor", "1,2"}).code, 1);
}

TEST(Cli, SegreCheck)
{
    const CliRun e = run({"segre-check", "-i", fixture("enriques.json")});
    ASSERT_EQ(e.code, 0) << e.err;
    const Json j = Json::parse(e.out);
    EXPECT_EQ(j["systems"][0]["pencil"]["verdict"], "segre-fails");
    EXPECT_EQ(j["systems"][0]["speciality"], "special");
    const CliRun t = run({"segre-check", "-i", fixture("enriques.json"), "--format", "text"});
    EXPECT_NE(t.out.find("segre-fails (chi=1, dim+g+1=2)"), std::string::npos) << t.out;
    const Json a = Json::parse(run({"segre-check", "-i", fixture("abelian.json")}).out);
    EXPECT_EQ(a["segre"]["status"], "exceptional-only");
    const Json k = Json::parse(run({"segre-check", "-i", fixture("k3_generic.json")}).out);
    EXPECT_EQ(k["curves"][0]["k3_kind"], "I");
}

TEST(Cli, StrictInclusion)
{
    const CliRun ok = run({"strict-inclusion", "-i", fixture("p2_r11.json"), "-o", tmp("si.json")});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(run({"verify", "-i", tmp("si.json")}).code, 0);
    const CliRun no = run({"strict-inclusion", "-i", fixture("p2_r10.json")});
    EXPECT_EQ(no.code, 2);
}

TEST(Cli, Slice)
{
    const CliRun s = run({"slice", "-i", fixture("p2_r12.json"), "--boundary", "8", "--format", "csv"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.out.substr(0, 6), "label,");
    EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 1 + 78 + 2 + 8);
}

TEST(Cli, AnalyzeUnmetAndFixtures)
{
    EXPECT_EQ(run({"analyze", "-i", fixture("p2_r9.json"), "--samples", "10"}).code, 2);
    for (const char* f : {"p2_r10.json", "p2_r17.json", "k3_generic.json", "abelian.json", "enriques.json"})
        EXPECT_EQ(run({"analyze", "-i", fixture(f), "--samples", "50"}).code, 0) << f;
}
