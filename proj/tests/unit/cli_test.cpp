#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "smallsort/cli.hpp"

namespace fs = std::filesystem;
using smallsort::cli::run;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

class CliTest : public ::testing::Test
{
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("smallsort_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, EmitBoseNelsonFour) {
    const Result r = invoke({"networks", "emit", "--kind", "bose-nelson-locality", "--n", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 4), "n 4\n");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST_F(CliTest, CheckValidAndInvalidFiles) {
    {
        std::ofstream f(path("good.txt"));
        f << invoke({"networks", "emit", "--network", "best", "--n", "10"}).out;
    }
    {
        std::ofstream f(path("bad.txt"));
        f << "n 3\n0 1\n1 2\n";
    }
    const Result good = invoke({"networks", "check", "--in", path("good.txt")});
    EXPECT_EQ(good.status, 0);
    EXPECT_EQ(good.out, "valid n=10 length=29 depth=9\n");
    const Result bad = invoke({"networks", "check", "--in", path("bad.txt")});
    EXPECT_EQ(bad.status, smallsort::cli::kExitInvalidNetwork);
    EXPECT_EQ(bad.out.substr(0, 7), "invalid");
    const Result generated = invoke({"networks", "check", "--kind", "bnp", "--n", "12"});
    EXPECT_EQ(generated.status, 0);
}

TEST_F(CliTest, BenchSingleIsByteIdenticalWithFakeCounter) {
    const std::vector<std::string> base = {"bench",      "single",  "--sizes",  "2..5",
                                           "--seed",     "7",       "--counter", "fake",
                                           "--iterations", "3",     "--measures", "2",
                                           "--strategy", "4CS,Cla", "--network", "best,bnl"};
    auto a = base;
    a.insert(a.end(), {"--out", path("a.csv")});
    auto b = base;
    b.insert(b.end(), {"--out", path("b.csv")});
    ASSERT_EQ(invoke(a).status, 0);
    ASSERT_EQ(invoke(b).status, 0);
    const std::string csv = slurp(path("a.csv"));
    EXPECT_EQ(csv, slurp(path("b.csv")));
    EXPECT_EQ(csv.substr(0, 30), "sorter,size,measure,cost,unit\n");
    // 2 insertion + 2 kinds x 2 strategies, 4 sizes, 2 measures
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 6 * 4 * 2);
    EXPECT_NE(csv.find("N BoNeL -N KR Cla,5,1,"), std::string::npos);
}

TEST_F(CliTest, RankTwoSorterFixture) {
    {
        std::ofstream f(path("in.csv"));
        f << "sorter,size,measure,cost,unit\nslow,2,0,30,cycles\nfast,2,0,10,cycles\n"
             "slow,2,1,30,cycles\nfast,2,1,10,cycles\n";
    }
    const Result r = invoke({"rank", "--in", path("in.csv"), "--out", path("ranks.csv")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(slurp(path("ranks.csv")), "sorter,geomean,rank,2\nfast,1,1,10\nslow,3,2,30\n");
}

TEST_F(CliTest, RankIncompleteData) {
    {
        std::ofstream f(path("in.csv"));
        f << "sorter,size,measure,cost,unit\na,2,0,3,ns\na,3,0,3,ns\nb,2,0,3,ns\n";
    }
    const Result r = invoke({"rank", "--in", path("in.csv")});
    EXPECT_EQ(r.status, smallsort::cli::kExitError);
    EXPECT_NE(r.err.find("no records for size 3"), std::string::npos);
}

TEST_F(CliTest, HelpListsCodes) {
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.status, 0);
    for (const char* code : {"Def", "QMa", "Tie", "4Cm", "4CS", "6Cm", "Cla", "CPr", "Grd", "Ung",
                             "Best", "BoNeL", "BoNeP", "SMALLSORT_COUNTER"})
        EXPECT_NE(r.out.find(code), std::string::npos) << code;
}

TEST_F(CliTest, Errors) {
    EXPECT_NE(invoke({"bench", "single", "--bogus"}).status, 0);
    EXPECT_NE(invoke({}).status, 0);
    EXPECT_EQ(invoke({"bench", "samplesort", "--config", "3x2", "--counter", "fake"}).status,
              smallsort::cli::kExitError);
    EXPECT_EQ(invoke({"bench", "single", "--strategy", "POp", "--counter", "fake"}).status,
              smallsort::cli::kExitError);
    EXPECT_EQ(invoke({"bench", "single", "--sizes", "2..5000", "--counter", "fake"}).status,
              smallsort::cli::kExitError);
    EXPECT_EQ(invoke({"bench", "single", "--sizes", "2", "--iterations", "1", "--measures", "1",
                      "--counter", "fake", "--out", path("missing/dir/x.csv")})
                  .status,
              smallsort::cli::kExitError);
    EXPECT_EQ(invoke({"networks", "emit", "--n", "40", "--kind", "bnl"}).status,
              smallsort::cli::kExitError);
}

TEST_F(CliTest, SortKeyFile) {
    {
        std::ofstream f(path("keys.txt"));
        f << "# keys\n5 3\n9\n1\n3\n";
    }
    for (const char* algo : {"small", "sample", "quick"}) {
        const Result r = invoke({"sort", "--in", path("keys.txt"), "--algorithm", algo});
        EXPECT_EQ(r.status, 0) << r.err;
        EXPECT_EQ(r.out, "1\n3\n3\n5\n9\n");
    }
}

TEST_F(CliTest, OtherBenchFamiliesRun) {
    const Result q = invoke({"bench", "quicksort", "--sizes", "300", "--iterations", "2",
                             "--measures", "1", "--counter", "fake", "--strategy", "Cla",
                             "--network", "best"});
    EXPECT_EQ(q.status, 0) << q.err;
    EXPECT_NE(q.out.find("QSort -Q KR Def,300,0,"), std::string::npos);
    EXPECT_NE(q.out.find("N Best -Q KR Cla,300,0,"), std::string::npos);
    const Result s = invoke({"bench", "samplesort", "--config", "334", "--iterations", "2",
                             "--measures", "1", "--counter", "fake", "--strategy", "4CS",
                             "--network", "bnl"});
    EXPECT_EQ(s.status, 0) << s.err;
    EXPECT_NE(s.out.find("N BoNeL -S334 KR 4CS,256,0,"), std::string::npos);
    const Result i = invoke({"bench", "inrow", "--sizes", "4..5", "--measures", "1",
                             "--evict-bytes", "4096", "--counter", "fake", "--strategy", "6Cm",
                             "--network", "bnp"});
    EXPECT_EQ(i.status, 0) << i.err;
    EXPECT_NE(i.out.find("N BoNeP -I KR 6Cm,5,0,"), std::string::npos);
}

TEST_F(CliTest, EnvironmentSelectsCounterWhenFlagAbsent) {
    ::setenv("SMALLSORT_COUNTER", "fake", 1);
    const Result r = invoke({"bench", "single", "--sizes", "3", "--iterations", "1",
                             "--measures", "1", "--strategy", "Def", "--network", "best"});
    const Result flagged = invoke({"bench", "single", "--sizes", "3", "--iterations", "1",
                                   "--measures", "1", "--strategy", "Def", "--network", "best",
                                   "--counter", "clock"});
    ::unsetenv("SMALLSORT_COUNTER");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find(",fake\n"), std::string::npos);
    EXPECT_NE(flagged.out.find(",ns\n"), std::string::npos);
}
