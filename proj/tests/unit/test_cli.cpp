#include "kch/cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace kch;
using kch::cli::json;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun kch_run(std::vector<std::string> args) {
    args.insert(args.begin(), "kch");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("kch-cli-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        setenv("KCH_CACHE", dir_.c_str(), 1);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

} // namespace

TEST_F(CliTest, AugpolyPrintsTrefoilPolynomial) {
    CliRun r = kch_run({"augpoly", "--braid", "1 1 1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("polynomial: la^2*mu^4 - la^2*mu^3"), std::string::npos) << r.out;
}

TEST_F(CliTest, D2CheckFigureEight) {
    CliRun r = kch_run({"d2-check", "--braid", "1 -2 1 -2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["command"], "d2-check");
    EXPECT_EQ(j["result"]["pass"], true);
    EXPECT_EQ(j["input"]["braid"], "1 -2 1 -2");
    EXPECT_EQ(j["version"], cli::kVersion);
}

TEST_F(CliTest, JsonRoundTripsByteIdentically) {
    const std::vector<std::vector<std::string>> cmds = {
        {"dga", "--braid", "1 1 1", "--json"},
        {"aug-count", "--braid", "1 1 1", "--enumerate", "--json"},
        {"linhom", "--braid", "1 1 1", "--aug", "la=1,mu=-1,U=1,a12=-2,a21=-2", "--json"},
        {"augpoly", "--braid", "-1 -1 -1", "--two-var", "--json"},
        {"examples", "--json"}};
    for (const auto &c : cmds) {
        CliRun r = kch_run(c);
        ASSERT_EQ(r.code, 0) << c[0] << ": " << r.err;
        std::string body = r.out.substr(0, r.out.size() - 1);
        EXPECT_EQ(json::parse(r.out).dump(2), body) << c[0];
    }
}

TEST_F(CliTest, CacheIsTransparent) {
    const std::vector<std::vector<std::string>> cmds = {
        {"augpoly", "--braid", "1 1 1", "--json"},
        {"augpoly", "--braid", "1 1 1"},
        {"aug-count", "--braid", "1 -2 1 -2", "--hat"},
        {"linhom", "--braid", "", "--n", "1", "--aug", "la=1,mu=t,U=1", "--coeff", "Laurent"}};
    for (const auto &c : cmds) {
        fs::remove_all(dir_);
        CliRun cold = kch_run(c);
        ASSERT_EQ(cold.code, 0) << cold.err;
        ASSERT_TRUE(fs::exists(dir_)) << "nothing cached";
        CliRun warm = kch_run(c);
        auto nc = c;
        nc.push_back("--no-cache");
        CliRun fresh = kch_run(nc);
        EXPECT_EQ(cold.out, warm.out);
        EXPECT_EQ(cold.out, fresh.out);
    }
}

TEST_F(CliTest, CorruptCacheEntryIsRecomputed) {
    CliRun cold = kch_run({"aug-count", "--braid", "1 1 1"});
    for (const auto &e : fs::directory_iterator(dir_)) {
        std::ofstream f(e.path());
        f << "{not json";
    }
    CliRun again = kch_run({"aug-count", "--braid", "1 1 1"});
    EXPECT_EQ(again.code, 0);
    EXPECT_EQ(again.out, cold.out);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(kch_run({"dga", "--braid", "1 x"}).code, 1);
    EXPECT_EQ(kch_run({"dga", "--braid", "1", "--frobnicate"}).code, 1);
    EXPECT_EQ(kch_run({"nonsense"}).code, 1);
    EXPECT_EQ(kch_run({"dga", "--braid", "1", "--mode", "sideways"}).code, 1);
    EXPECT_EQ(kch_run({"augpoly", "--braid", "1 1"}).code, 1); // a link
    EXPECT_EQ(kch_run({"aug-count", "--braid", "1", "--prime", "4"}).code, 1);
    EXPECT_EQ(kch_run({"linhom", "--braid", "1 1 1", "--aug", "la=1,mu=1,U=1,a12=1"}).code, 1);
    EXPECT_EQ(kch_run({"homfly-check", "--braid", "1", "--homfly-file", "/nonexistent"}).code, 1);
    EXPECT_EQ(kch_run({"augpoly", "--braid", "1 2 3 4", "--no-cache"}).code, 2);
    EXPECT_EQ(kch_run({"dga", "--help"}).code, 0);
}

TEST_F(CliTest, HomflyFile) {
    fs::create_directories(dir_);
    fs::path good = dir_ / "rh.txt", bad = dir_ / "bad.txt";
    std::ofstream(good) << "-a^-4 + a^-2*q^-2 + a^-2*q^2\n";
    std::ofstream(bad) << "a^-2\n";
    CliRun ok = kch_run({"homfly-check", "--braid", "1 1 1", "--homfly-file", good.string()});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    CliRun no = kch_run({"homfly-check", "--braid", "1 1 1", "--homfly-file", bad.string()});
    EXPECT_EQ(no.code, 1) << no.out;
    CliRun ap = kch_run({"augpoly", "--braid", "1 1 1", "--homfly-file", good.string(), "--json"});
    EXPECT_EQ(json::parse(ap.out)["result"]["homfly"]["pass"], true);
}

TEST_F(CliTest, CompareTransverseMarkovMoves) {
    // Conjugate and positive stabilization are the same transverse knot.
    CliRun conj = kch_run({"compare-transverse", "--braid", "1 -2 1 -2", "--braid", "-2 1 -2 1",
                        "--json"});
    ASSERT_EQ(conj.code, 0) << conj.err;
    EXPECT_EQ(json::parse(conj.out)["result"]["verdict"], "not distinguished");
    CliRun stab = kch_run({"compare-transverse", "--braid", "1 1 1", "--braid", "1 1 1 2", "--json"});
    ASSERT_EQ(stab.code, 0) << stab.err;
    EXPECT_EQ(json::parse(stab.out)["result"]["verdict"], "not distinguished");
    EXPECT_EQ(kch_run({"compare-transverse", "--braid", "1 1"}).code, 1);
    EXPECT_EQ(kch_run({"compare-transverse", "--braid", "1 1", "--braid", "1"}).code, 1);
}

TEST_F(CliTest, FixtureGuards) {
    fs::create_directories(dir_);
    fs::path f = dir_ / "bad.json";
    std::ofstream(f) << R"({"braids": [{"word": "1 1 1", "strands": 2, "self_linking": 3}]})";
    EXPECT_EQ(kch_run({"compare-transverse", "--fixture", f.string()}).code, 1);
    std::ofstream(f) << "[]";
    EXPECT_EQ(kch_run({"compare-transverse", "--fixture", f.string()}).code, 1);
    auto bs = cli::load_braid_fixture(std::string(KCH_FIXTURE_DIR) + "/figure5_braids.json");
    ASSERT_EQ(bs.size(), 2u);
    EXPECT_EQ(self_linking(bs[0]), -1);
    EXPECT_EQ(self_linking(bs[1]), -1);
    EXPECT_EQ(alexander_polynomial(bs[0]), alexander_polynomial(bs[1]));
}

TEST_F(CliTest, ExamplesVerify) {
    CliRun r = kch_run({"examples", "--verify", "--json"});
    ASSERT_EQ(r.code, 0) << r.out;
    json j = json::parse(r.out);
    EXPECT_EQ(j["result"]["failed"], 0);
    std::set<std::string> names;
    for (const auto &e : j["result"]["entries"]) {
        names.insert(e["name"]);
        for (const auto &a : e["artifacts"])
            EXPECT_TRUE(a["provenance"] == "published" || a["provenance"] == "derived" ||
                        a["provenance"] == "regression");
    }
    for (const char *n : {"unknot", "trefoil-right", "trefoil-left", "full-twist-3", "figure-eight"})
        EXPECT_TRUE(names.count(n)) << n;
    EXPECT_EQ(kch_run({"examples", "--name", "nope"}).code, 1);
}

TEST(CliBinary, MainWiring) {
    std::string cmd = std::string("\"") + KCH_CLI_PATH + "\" d2-check --braid \"1 1 1\" --no-cache > /dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    std::string bad = std::string("\"") + KCH_CLI_PATH + "\" dga --bogus 2> /dev/null";
    int st = std::system(bad.c_str());
    EXPECT_TRUE(WIFEXITED(st));
    EXPECT_EQ(WEXITSTATUS(st), 1);
}
