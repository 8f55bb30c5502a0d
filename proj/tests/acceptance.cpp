// One line per acceptance criterion. Exit status is the number of failed criteria.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fresnelkit/verify.hpp"

namespace fs = std::filesystem;
using fresnelkit::VerificationReport;

namespace {

std::map<std::string, VerificationReport> reports;
int failures = 0;

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> checks;
};

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("criterion %2d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    if (!ok) ++failures;
}

void from_checks(const Criterion& c) {
    bool ok = true;
    std::string detail;
    for (const auto& name : c.checks) {
        const auto it = reports.find(name);
        if (it == reports.end()) {
            ok = false;
            detail += name + " missing; ";
            continue;
        }
        const auto& r = it->second;
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s %.3g/%.3g%s; ", name.c_str(), r.measured, r.tolerance, r.passed ? "" : " FAILED");
        detail += buf;
        ok = ok && r.passed;
    }
    if (detail.size() >= 2) detail.resize(detail.size() - 2);
    report(c.id, c.title, ok, detail);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::map<std::string, std::string> figure_files(const fs::path& dir, const std::vector<std::string>& ids) {
    fs::create_directories(dir);
    const auto old = fs::current_path();
    fs::current_path(dir);
    std::map<std::string, std::string> files;
    std::ostringstream out, err;
    for (const auto& id : ids) fresnelkit::cli::run({"figure", id}, out, err);
    fs::current_path(old);
    for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = slurp(e.path());
    return files;
}

void golden_figures() {
    const std::vector<std::string> ids{"fig-rod-profiles", "fig-disk", "fig-frac-table"};
    const fs::path base = fs::temp_directory_path() / "fresnelkit_acceptance";
    fs::remove_all(base);
    const auto a = figure_files(base / "a", ids);
    const auto b = figure_files(base / "b", ids);
    const bool same = !a.empty() && a == b && a.size() == 11;

    bool decays = true;
    double prev = INFINITY;
    std::string amps;
    for (const auto& [name, prof] : fresnelkit::cli::figure_curves("fig-rod-profiles")) {
        double m = 0;
        for (double v : prof.values) m = std::max(m, std::abs(v));
        decays = decays && m < prev;
        prev = m;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s max %.4g ", name.c_str(), m);
        amps += buf;
    }
    fs::remove_all(base);
    report(11, "golden figures", same && decays,
           std::to_string(a.size()) + " files " + (same ? "byte-identical" : "DIFFER") + "; " + amps);
}

}  // namespace

int main() {
    for (auto& r : fresnelkit::run_suite("all")) reports[r.check_name] = r;

    const std::vector<Criterion> criteria{
        {1, "normalization", {"rod.normalization"}},
        {2, "transform identity", {"rod.fourier_transform"}},
        {3,
         "rod PDE residuals",
         {"rod.pde.free", "rod.pde.absorbing", "rod.pde.reflecting", "rod.pde.elastic_a1", "rod.pde.drift_mu0.5"}},
        {4, "boundary contracts", {"rod.boundary_absorbing", "rod.boundary_reflecting", "rod.boundary_elastic"}},
        {5, "elastic limits", {"rod.elastic_limit_absorbing", "rod.elastic_limit_reflecting"}},
        {6,
         "fractional series cross-checks",
         {"fracrod.series_vs_fresnel", "fracrod.series_vs_bernstein", "fracrod.series_vs_airy",
          "fracrod.series_vs_subordination"}},
        {7,
         "fractional transforms",
         {"fracrod.fourier_nu0.4", "fracrod.fourier_nu0.6", "fracrod.fourier_nu0.8", "fracrod.fourier_nu1.0",
          "fracrod.laplace"}},
        {8,
         "plates",
         {"plates.normalization_2d", "plates.nonfactorization", "plates.disk_mass", "plates.disk_neumann"}},
        {9,
         "pseudo-process",
         {"pseudo.marginalize_n2", "pseudo.marginalize_n3", "pseudo.superposition_identity",
          "pseudo.self_convolution"}},
        {10,
         "subordinated laws",
         {"subord.biquadratic_fourier", "subord.double_cauchy_mass", "subord.double_cauchy_positivity",
          "subord.double_cauchy_biharmonic", "subord.double_cauchy_decomposition", "subord.iterated_pde_transform_n0",
          "subord.iterated_pde_transform_n1", "subord.iterated_pde_transform_n2",
          "subord.iterated_pde_transform_n3"}},
    };
    for (const auto& c : criteria) from_checks(c);
    golden_figures();
    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
