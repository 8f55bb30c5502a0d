#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/plates.hpp"
#include "fresnelkit/rod.hpp"
#include "fresnelkit/subord.hpp"
#include "fresnelkit/verify.hpp"

namespace fk = fresnelkit;

namespace {

const std::vector<fk::VerificationReport>& all_once() {
    static const auto r = fk::run_suite("all");
    return r;
}

}  // namespace

TEST(Suites, Names) {
    const auto& n = fk::suite_names();
    EXPECT_EQ(std::set<std::string>(n.begin(), n.end()),
              (std::set<std::string>{"specfun", "quad", "rod", "fracrod", "plates", "pseudo", "subord"}));
    EXPECT_THROW(fk::run_suite("bogus"), fk::UnknownName);
}

TEST(Suites, AllIsSortedUnionWithCoverage) {
    const auto& all = all_once();
    std::map<std::string, int> per;
    for (size_t i = 0; i < all.size(); ++i) {
        if (i) EXPECT_LE(all[i - 1].check_name, all[i].check_name);
        per[all[i].check_name.substr(0, all[i].check_name.find('.'))]++;
        EXPECT_EQ(all[i].passed, all[i].measured <= all[i].tolerance) << all[i].check_name;
    }
    for (const auto& n : fk::suite_names()) EXPECT_GE(per[n], 3) << n;
    EXPECT_GE(per["rod"], 8);
}

TEST(Suites, Deterministic) {
    const auto a = fk::run_suite("subord");
    const auto b = fk::run_suite("subord");
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].check_name, b[i].check_name);
        EXPECT_EQ(a[i].measured, b[i].measured);
        EXPECT_EQ(a[i].passed, b[i].passed);
        EXPECT_EQ(a[i].notes, b[i].notes);
    }
    // same values inside the full run
    std::map<std::string, double> m;
    for (const auto& r : all_once()) m[r.check_name] = r.measured;
    for (const auto& r : a) EXPECT_EQ(m.at(r.check_name), r.measured) << r.check_name;
}

TEST(Suites, EveryCheckPassesOnACorrectBuild) {
    for (const auto& r : all_once()) EXPECT_TRUE(r.passed) << r.check_name << " measured " << r.measured << " tol " << r.tolerance;
}

TEST(Seed, DefaultAndOverride) {
    ::unsetenv("FRESNELKIT_SEED");
    const auto def = fk::verification_seed();
    EXPECT_EQ(def, 20240531u);
    ::setenv("FRESNELKIT_SEED", "12345", 1);
    EXPECT_EQ(fk::verification_seed(), 12345u);
    const auto r = fk::run_suite("specfun");
    bool seen = false;
    for (const auto& x : r) seen = seen || x.notes.find("12345") != std::string::npos;
    EXPECT_TRUE(seen);
    ::setenv("FRESNELKIT_SEED", "junk", 1);
    EXPECT_EQ(fk::verification_seed(), def);
    ::unsetenv("FRESNELKIT_SEED");
}

TEST(PdeScan, Examples) {
    const fk::Box rod{0.3, 3, 0.5, 2};
    const auto a = fk::pde_residual_scan(fk::free_kernel(), fk::PdeOp::Rod, rod, 5);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(a.check_name, "pde.rod." + fk::free_kernel().identity);
    EXPECT_GT(a.evaluations, 0);
    EXPECT_TRUE(fk::pde_residual_scan(fk::biquadratic_kernel(), fk::PdeOp::BiquadraticHeat, rod, 5).passed);
    EXPECT_TRUE(fk::pde_residual_scan(fk::double_cauchy_kernel(), fk::PdeOp::Biharmonic4t4x, {0, 2, 0.5, 2}, 5).passed);
}

TEST(PdeScan, DetectsAWrongOperator) {
    // the free kernel is not a solution of the heat-type biquadratic equation
    EXPECT_FALSE(fk::pde_residual_scan(fk::free_kernel(), fk::PdeOp::BiquadraticHeat, {0.3, 3, 0.5, 2}, 3).passed);
}

TEST(PdeScan, Errors) {
    EXPECT_THROW(fk::pde_residual_scan(fk::free_kernel(), fk::PdeOp::Rod, {0, 1, 0, 1}, 3), fk::DomainError);
    EXPECT_THROW(fk::pde_residual_scan(fk::free_kernel(), fk::PdeOp::Rod, {0, 1, 0.5, 1}, 0), fk::DomainError);
    EXPECT_THROW(fk::pde_residual_scan(fk::free_kernel(), fk::PdeOp::Plate2D, {0, 1, 0.5, 1}, 2), fk::DomainError);
    const auto half = fk::halfline_kernel(fk::BoundarySpec::reflecting(1));
    EXPECT_THROW(fk::pde_residual_scan(half, fk::PdeOp::Rod, {-1, 1, 0.5, 1}, 2), fk::DomainError);
}
