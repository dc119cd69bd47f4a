#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "test_support.hpp"
#include "xjac/app/cache.hpp"
#include "xjac/app/commands.hpp"
#include "xjac/app/config.hpp"
#include "xjac/app/report.hpp"

namespace xjac::app {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::string& command, const ExperimentConfig& cfg) {
    std::ostringstream out, err;
    const int code = run_command(command, cfg, out, err);
    return {code, out.str(), err.str()};
}

ExperimentConfig reference_config() {
    ExperimentConfig cfg;
    cfg.p = {7};
    cfg.f = "1,0,0,0,0,1";
    return cfg;
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("xjac-test-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

TEST(Report, CsvFormatting) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(59.0 / 350.0), "0.168571428571");
    EXPECT_EQ(format_double(-0.0), "0");
    Table t;
    t.columns = {"a", "b", "c", "d"};
    t.add({std::uint64_t{3}, 0.5, std::string("x,y"), true});
    std::ostringstream os;
    write_csv(os, t);
    EXPECT_EQ(os.str(), "a,b,c,d\n3,0.5,\"x,y\",true\n");
    EXPECT_THROW(t.add({std::uint64_t{1}}), std::logic_error);
}

TEST(Config, JsonAndLists) {
    ExperimentConfig cfg;
    apply_json(cfg, R"({"p": [7, 11], "n": 2, "f": "auto", "extractor": "sum,prod", "k": "1,2", "seed": 9,
                        "timing": true, "cache_dir": "/tmp/x"})");
    EXPECT_EQ(cfg.p, (std::vector<std::uint64_t>{7, 11}));
    EXPECT_EQ(cfg.n, (std::vector<std::size_t>{2}));
    EXPECT_EQ(cfg.extractor, (std::vector<std::string>{"sum", "prod"}));
    EXPECT_EQ(cfg.k, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_TRUE(cfg.timing);
    EXPECT_EQ(effective_cache_dir(cfg), "/tmp/x");
    EXPECT_THROW(apply_json(cfg, R"({"bogus": 1})"), Error);
    EXPECT_THROW(apply_json(cfg, R"({"p": -3})"), Error);
    EXPECT_THROW(apply_json(cfg, "not json"), Error);
    EXPECT_THROW(parse_uint_list("7,,11", "p"), Error);
    EXPECT_THROW(parse_uint_list("7,x", "p"), Error);
}

TEST(Config, CacheDirFromEnvironment) {
    ExperimentConfig cfg;
    ::setenv("XJAC_CACHE_DIR", "/tmp/from-env", 1);
    EXPECT_EQ(effective_cache_dir(cfg), "/tmp/from-env");
    cfg.cache_dir = "/tmp/flag";
    EXPECT_EQ(effective_cache_dir(cfg), "/tmp/flag");
    ::unsetenv("XJAC_CACHE_DIR");
    cfg.cache_dir.reset();
    EXPECT_FALSE(effective_cache_dir(cfg).has_value());
}

TEST(Config, ExplicitModulus) {
    ExperimentConfig cfg;
    cfg.modulus = "1,0,1";
    EXPECT_EQ(make_field(cfg, 3, 2).modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    cfg.modulus = "2,0,1";
    EXPECT_THROW(make_field(cfg, 3, 2), Error);
    cfg.modulus = "1,0,1";
    EXPECT_THROW(make_field(cfg, 3, 3), Error);
}

TEST(Cache, RoundTripAndValidation) {
    const Curve c = testing::reference_curve();
    JacobianData data{curve_points(c), jacobian_enumerate(c), false};
    const std::string text = serialize_jacobian(c, data);
    const auto back = deserialize_jacobian(c, text);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->divisors, data.divisors);
    EXPECT_EQ(back->points, data.points);
    EXPECT_TRUE(back->from_cache);

    // A different curve must not accept this entry.
    const Curve other = testing::prime_curve(7, {2, 0, 0, 0, 0, 1});
    EXPECT_FALSE(deserialize_jacobian(other, text).has_value());
    EXPECT_NE(cache_file_name(c), cache_file_name(other));
    // Tampering: a divisor that fails u | v^2 - f, or a duplicated one.
    auto bad = nlohmann::json::parse(text);
    bad["divisors"][3][1][0][0] = (bad["divisors"][3][1][0][0].get<int>() + 1) % 7;
    EXPECT_FALSE(deserialize_jacobian(c, bad.dump()).has_value());
    auto dup = nlohmann::json::parse(text);
    dup["divisors"][2] = dup["divisors"][1];
    EXPECT_FALSE(deserialize_jacobian(c, dup.dump()).has_value());
    EXPECT_FALSE(deserialize_jacobian(c, "{}").has_value());
    EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Commands, JacobianReport) {
    const Outcome r = run("jacobian", reference_config());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1], "1,jacobian,7,1,7,\"1,0,0,0,0,1\",7,50,7.33595804593,176.664041954,true,56,57,600,0,42,0,pass");
}

TEST(Commands, WarmCacheGivesIdenticalReport) {
    const fs::path dir = scratch_dir("cache");
    ExperimentConfig cfg = reference_config();
    cfg.cache_dir = dir.string();
    const Outcome cold = run("jacobian", cfg);
    ASSERT_EQ(cold.code, 0) << cold.err;
    ASSERT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
    const Outcome warm = run("jacobian", cfg);
    EXPECT_EQ(warm.out, cold.out);
    // A corrupted entry is ignored and rewritten.
    for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path()) << "{\"version\": 1}";
    std::ostringstream captured;
    auto* old = std::cerr.rdbuf(captured.rdbuf());
    const Outcome repaired = run("jacobian", cfg);
    std::cerr.rdbuf(old);
    EXPECT_EQ(repaired.out, cold.out);
    EXPECT_NE(captured.str().find("invalid cache entry"), std::string::npos);
    EXPECT_EQ(run("jacobian", cfg).out, cold.out);
    fs::remove_all(dir);
}

TEST(Commands, ExtractSdGoldenAndErrors) {
    ExperimentConfig cfg = reference_config();
    const Outcome r = run("extract-sd", cfg);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(",sum,1,0.168571428571,0.1688,0.0625,"), std::string::npos);

    ExperimentConfig sk = cfg;
    sk.p = {3};
    sk.n = {2};
    sk.f = "auto";
    sk.extractor = {"sk"};
    const Outcome e = run("extract-sd", sk);
    EXPECT_EQ(e.code, 2);
    EXPECT_NE(e.err.find("ConfigError"), std::string::npos);

    ExperimentConfig bad_f = cfg;
    bad_f.f = "0,0,0,1,5,1";
    const Outcome nsf = run("jacobian", bad_f);
    EXPECT_EQ(nsf.code, 2);
    EXPECT_NE(nsf.err.find("NotSquarefree"), std::string::npos);

    ExperimentConfig big = cfg;
    big.p = {101};
    big.f = "1,1,0,0,0,1";
    big.budget = 1000;
    EXPECT_EQ(run("jacobian", big).code, 3);

    ExperimentConfig mode = cfg;
    mode.mode = "fast";
    EXPECT_EQ(run("extract-sd", mode).code, 2);
    ExperimentConfig fmt = cfg;
    fmt.format = "xml";
    EXPECT_EQ(run("extract-sd", fmt).code, 2);
}

TEST(Commands, MonteCarloIsByteDeterministicAcrossWorkers) {
    ExperimentConfig cfg = reference_config();
    cfg.mode = "montecarlo";
    cfg.samples = 100000;
    cfg.seed = 42;
    const Outcome a = run("extract-sd", cfg);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(run("extract-sd", cfg).out, a.out);
    cfg.jobs = 4;
    EXPECT_EQ(run("extract-sd", cfg).out, a.out);
    cfg.format = "json";
    const Outcome j = run("extract-sd", cfg);
    EXPECT_EQ(run("extract-sd", cfg).out, j.out);
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["schema"], 1);
    EXPECT_EQ(doc["rows"][0]["samples"], 100000);
    EXPECT_NEAR(doc["rows"][0]["sd"].get<double>(), 59.0 / 350.0, 0.02);
}

TEST(Commands, WritesOutputFile) {
    const fs::path dir = scratch_dir("out");
    ExperimentConfig cfg = reference_config();
    cfg.out = (dir / "row.csv").string();
    const Outcome r = run("extract-sd", cfg);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(cfg.out);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg.out.clear();
    EXPECT_EQ(ss.str(), run("extract-sd", cfg).out);
    fs::remove_all(dir);
}

TEST(Commands, CharsumModes) {
    ExperimentConfig cfg;
    cfg.mode = "mordell";
    cfg.p = {7};
    const Outcome m = run("charsum", cfg);
    ASSERT_EQ(m.code, 0) << m.err;
    const auto rows = lines(m.out);
    EXPECT_EQ(rows.size(), 1u + 49u * 6u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_NE(rows[i].find(",2.64575131106,8.60703414132,"), std::string::npos) << rows[i];
        EXPECT_EQ(rows[i].substr(rows[i].size() - 4), "pass");
    }

    cfg.mode = "winterhof";
    cfg.p = {3};
    cfg.n = {2};
    const auto w = lines(run("charsum", cfg).out);
    ASSERT_EQ(w.size(), 5u);
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_NE(w[i].find(",9,9,1,pass"), std::string::npos);

    cfg.mode = "interval";
    cfg.p = {7};
    cfg.n = {1};
    cfg.L = 7;
    const auto iv = lines(run("charsum", cfg).out);
    ASSERT_EQ(iv.size(), 2u);
    EXPECT_EQ(iv[1], "1,charsum/interval,7,1,7,L=7,7,19.6514844544,0.356207187108,pass");

    cfg.mode = "orthogonality";
    cfg.p = {7, 11};
    EXPECT_EQ(lines(run("charsum", cfg).out).size(), 1u + 7u + 11u);

    cfg.mode = "nope";
    EXPECT_EQ(run("charsum", cfg).code, 2);
}

TEST(Commands, SweepGridSummaryAndPartialFailure) {
    ExperimentConfig cfg;
    cfg.p = {7, 11, 13};
    cfg.c = {0, 1, 2};
    const Outcome r = run("sweep", cfg);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 5u);  // header, 3 cells, summary
    EXPECT_NE(rows[1].find("1,sweep,7,1,7,\"1,0,0,0,0,1\",50,sum"), std::string::npos);
    EXPECT_NE(rows[2].find("1,sweep,11,1,11,\"1,1,0,0,0,1\",88,sum"), std::string::npos);
    EXPECT_NE(rows[3].find("1,sweep,13,1,13,\"1,2,0,0,0,1\",234,sum"), std::string::npos);
    EXPECT_EQ(rows[4].rfind("1,summary,", 0), 0u);
    cfg.jobs = 3;
    EXPECT_EQ(run("sweep", cfg).out, r.out);

    // p = 101 exceeds a small budget: flagged, sweep continues, exit 0.
    ExperimentConfig partial = cfg;
    partial.p = {7, 101};
    partial.c = {0};
    partial.f = "1,c,0,0,0,1";
    partial.budget = 5000;
    const Outcome pr = run("sweep", partial);
    EXPECT_EQ(pr.code, 0);
    const auto prow = lines(pr.out);
    ASSERT_EQ(prow.size(), 4u);
    EXPECT_EQ(prow[2].substr(prow[2].size() - 15), "budget_exceeded");
    EXPECT_NE(pr.err.find("warning: 1"), std::string::npos);
    EXPECT_NE(prow[3].find("warnings=1"), std::string::npos);

    ExperimentConfig empty = cfg;
    empty.p.clear();
    EXPECT_EQ(run("sweep", empty).code, 2);
    ExperimentConfig none = cfg;
    none.extractor = {"sk"};
    none.n = {2};
    none.p = {3};
    none.c = {0};
    EXPECT_EQ(run("sweep", none).code, 2);
}

#ifdef XJAC_CLI_PATH
int shell(const std::string& args) {
    const std::string cmd = std::string(XJAC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(shell("jacobian --p 7 --f 1,0,0,0,0,1"), 0);
    EXPECT_EQ(shell("jacobian --p 7 --f 0,0,0,1,5,1"), 2);
    EXPECT_EQ(shell("jacobian --p 9 --f 1,0,0,0,0,1"), 2);
    EXPECT_EQ(shell("jacobian --p 101 --f 1,1,0,0,0,1 --budget 1000"), 3);
    EXPECT_EQ(shell("extract-sd --p 7 --f 1,0,0,0,0,1 --extractor xor"), 2);
    EXPECT_EQ(shell("jacobian --bogus"), 2);
    EXPECT_EQ(shell(""), 2);
}

TEST(Binary, ConfigFileWithFlagOverride) {
    const fs::path dir = scratch_dir("config");
    const fs::path cfg = dir / "exp.json";
    std::ofstream(cfg) << R"({"p": 7, "f": "1,0,0,0,0,1", "extractor": "prod", "k": 1})";
    const fs::path out1 = dir / "a.csv";
    const fs::path out2 = dir / "b.csv";
    ASSERT_EQ(shell("extract-sd --config " + cfg.string() + " --out " + out1.string()), 0);
    ASSERT_EQ(shell("extract-sd --config " + cfg.string() + " --extractor sum --out " + out2.string()), 0);
    std::stringstream a, b;
    a << std::ifstream(out1).rdbuf();
    b << std::ifstream(out2).rdbuf();
    EXPECT_NE(a.str().find(",prod,1,0.174285714286,"), std::string::npos);
    EXPECT_NE(b.str().find(",sum,1,0.168571428571,"), std::string::npos);
    fs::remove_all(dir);
}
#endif

}  // namespace
}  // namespace xjac::app
