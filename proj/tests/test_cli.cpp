#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fresnelkit/errors.hpp"

namespace cli = fresnelkit::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = cli::run(args, o, e);
    return {c, o.str(), e.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

double max_abs(const cli::Profile& p) {
    double m = 0;
    for (double v : p.values) m = std::max(m, std::abs(v));
    return m;
}

// scratch directory, left on exit so a failing test can be inspected
struct TempDir {
    fs::path path, old;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("fresnelkit_cli_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
        old = fs::current_path();
        fs::current_path(path);
    }
    ~TempDir() { fs::current_path(old); }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(Eval, FresnelCsvExample) {
    const auto r = run({"eval", "fresnel", "--t", "1", "--xmin", "-15", "--xmax", "15", "--points", "601", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 602u);
    EXPECT_EQ(ls[0], "x,value");
    const auto& mid = ls[301];
    EXPECT_EQ(mid.substr(0, 2), "0,");
    EXPECT_NEAR(std::stod(mid.substr(2)), 1 / (2 * std::sqrt(M_PI)), 1e-16);
}

TEST(Eval, JsonRoundTrip) {
    const auto r = run({"eval", "halfline", "--t", "0.8", "--alpha", "2", "--points", "11", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto p = cli::profile_from_json(r.out);
    EXPECT_EQ(p.meta.kernel, "halfline");
    EXPECT_EQ(p.meta.t, 0.8);
    EXPECT_EQ(p.meta.params.at("alpha"), 2.0);
    EXPECT_FALSE(p.meta.generated.empty());
    ASSERT_EQ(p.grid.size(), 11u);
    EXPECT_EQ(p.grid.front(), 0.0);
    const auto again = cli::profile_from_json(cli::to_json(p));
    EXPECT_EQ(again.values, p.values);
    EXPECT_EQ(again.grid, p.grid);
}

TEST(Eval, EveryRegisteredKernelEvaluates) {
    for (const auto& k : cli::kernel_names()) {
        cli::EvalParams p;
        p.points = 21;
        if (k == "iterated" || k == "npoint") p.depth = 2;
        const auto prof = cli::evaluate(k, p);
        EXPECT_EQ(prof.values.size(), 21u) << k;
    }
}

TEST(Eval, DiskProfileIsInterior) {
    const auto r = run({"eval", "disk-vibration", "--R", "1", "--t", "50", "--points", "200"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 201u);
    EXPECT_GT(std::stod(ls[1]), 0.0);
    EXPECT_LT(std::stod(ls[200]), 1.0);
}

TEST(Eval, AmplitudeDecaysBetweenTimes) {
    cli::EvalParams p;
    p.t = 20;
    const double a20 = max_abs(cli::evaluate("fresnel", p));
    p.t = 60;
    EXPECT_LT(max_abs(cli::evaluate("fresnel", p)), a20);
}

TEST(Eval, ExitCodes) {
    EXPECT_EQ(run({"eval", "nope"}).code, 2);
    EXPECT_EQ(run({"eval", "fresnel", "--t", "-1"}).code, 3);
    EXPECT_EQ(run({"eval", "frac-series", "--nu", "1.5"}).code, 3);
    EXPECT_EQ(run({"eval", "iterated", "--depth", "5"}).code, 3);
    EXPECT_EQ(run({"eval", "fresnel", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Verify, SubsetAndUnknownSuite) {
    const auto r = run({"verify", "subord", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("subord.double_cauchy_mass"), std::string::npos);
    EXPECT_EQ(r.out.find("rod."), std::string::npos);
    EXPECT_EQ(run({"verify", "bogus"}).code, 2);
    const auto c = run({"verify", "quad", "--format", "csv"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(lines(c.out).at(0), "check_name,measured,tolerance,passed,evaluations,notes");
}

TEST(Verify, FailingCheckGivesExitOne) {
    // rod carries a failing drift check, see the drift tests
    EXPECT_EQ(run({"verify", "rod"}).code, 1);
}

TEST(Figure, FileCounts) {
    TempDir d("counts");
    auto r = run({"figure", "fig-rod-profiles"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 4u);
    for (const char* f : {"fig-rod-profiles_t1.csv", "fig-rod-profiles_t20.csv", "fig-rod-profiles_t40.csv",
                          "fig-rod-profiles_t60.csv"})
        EXPECT_TRUE(fs::exists(d.path / f)) << f;
    r = run({"figure", "fig-disk"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 3u);
    EXPECT_EQ(run({"figure", "fig-nothing"}).code, 2);
}

TEST(Figure, AllFiguresProduceFiniteCurves) {
    for (const auto& id : cli::figure_ids()) {
        const auto curves = cli::figure_curves(id);
        EXPECT_FALSE(curves.empty()) << id;
        for (const auto& [name, prof] : curves)
            for (double v : prof.values) ASSERT_TRUE(std::isfinite(v)) << id << " " << name;
    }
}

TEST(Figure, ByteIdenticalAcrossRuns) {
    std::string first;
    {
        TempDir d("run1");
        ASSERT_EQ(run({"figure", "fig-frac-table"}).code, 0);
        first = slurp(d.path / "fig-frac-table_nu1_3.csv");
    }
    TempDir d("run2");
    ASSERT_EQ(run({"figure", "fig-frac-table"}).code, 0);
    EXPECT_EQ(slurp(d.path / "fig-frac-table_nu1_3.csv"), first);
    EXPECT_FALSE(first.empty());
}
