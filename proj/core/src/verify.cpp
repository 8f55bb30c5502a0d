#include "fresnelkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/quad.hpp"
#include "suites.hpp"

namespace fresnelkit {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240531;

double d(const RealFn& f, double x0, int order, double step = 0) {
    StencilSpec s;
    s.order = order;
    s.step = step;
    return finite_diff(f, x0, s);
}

std::vector<double> nodes(double lo, double hi, int n) {
    if (n == 1) return {0.5 * (lo + hi)};
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

double rel(double lhs, double rhs) {
    return std::abs(lhs + rhs) / std::max(1.0, std::max(std::abs(lhs), std::abs(rhs)));
}

}  // namespace

const char* pde_op_name(PdeOp op) {
    switch (op) {
        case PdeOp::Rod: return "rod";
        case PdeOp::Plate2D: return "plate2d";
        case PdeOp::Biharmonic4t4x: return "biharmonic4t4x";
        default: return "biquadratic_heat";
    }
}

VerificationReport pde_residual_scan(const SignedKernel& k, PdeOp op, const Box& box, int grid, std::string name) {
    if (grid < 1) throw DomainError("pde_residual_scan: grid must be >= 1");
    if (!(box.t_lo > 0) || !(box.t_hi >= box.t_lo) || !(box.x_hi >= box.x_lo))
        throw DomainError("pde_residual_scan: box needs t_lo > 0 and ordered edges");
    if (box.x_lo < k.x_min || box.x_hi > k.x_max) throw DomainError("pde_residual_scan: box leaves the kernel domain");
    if (op == PdeOp::Plate2D && !k.eval2) throw DomainError("pde_residual_scan: Plate2D needs a two-variable kernel");

    long evals = 0;
    auto u = [&](double x, double t) {
        ++evals;
        return k.eval(x, t);
    };
    double worst = 0;
    const auto xs = nodes(box.x_lo, box.x_hi, grid);

    if (op == PdeOp::Plate2D) {
        auto u2 = [&](double a, double b, double t) {
            ++evals;
            return k.eval2(a, b, t);
        };
        for (double t : {box.t_lo, box.t_hi})
            for (double a : xs)
                for (double b : xs) {
                    const double ha = default_step(4, a), hb = default_step(4, b);
                    const double utt = d([&](double s) { return u2(a, b, s); }, t, 2);
                    const double uaaaa = d([&](double s) { return u2(s, b, t); }, a, 4);
                    const double ubbbb = d([&](double s) { return u2(a, s, t); }, b, 4);
                    const double uaabb =
                        d([&](double s) { return d([&](double r) { return u2(s, r, t); }, b, 2, hb); }, a, 2, ha);
                    worst = std::max(worst, rel(utt, 0.25 * (uaaaa + 2 * uaabb + ubbbb)));
                }
    } else {
        const double mu = k.params.count("mu_drift") ? k.params.at("mu_drift") : 0.0;
        for (double t : nodes(box.t_lo, box.t_hi, grid))
            for (double x : xs) {
                auto fx = [&](double s) { return u(s, t); };
                auto ft = [&](double s) { return u(x, s); };
                double lhs = 0, rhs = 0;
                switch (op) {
                    case PdeOp::Rod:
                        lhs = d(ft, t, 2);
                        rhs = 0.25 * d(fx, x, 4);
                        if (mu != 0) rhs += 0.25 * (-2 * mu * d(fx, x, 3) + mu * mu * d(fx, x, 2));
                        break;
                    case PdeOp::Biharmonic4t4x:
                        lhs = d(ft, t, 4);
                        rhs = d(fx, x, 4);
                        break;
                    default:
                        lhs = d(ft, t, 1);
                        rhs = d(fx, x, 4) / 8;
                        break;
                }
                worst = std::max(worst, rel(lhs, rhs));
            }
    }
    if (name.empty()) name = std::string("pde.") + pde_op_name(op) + "." + k.identity;
    char notes[160];
    std::snprintf(notes, sizeof notes, "box x[%g,%g] t[%g,%g], grid %d", box.x_lo, box.x_hi, box.t_lo, box.t_hi,
                  grid);
    return make_report(std::move(name), worst, 1e-3, evals, notes);
}

std::uint64_t verification_seed() {
    if (const char* s = std::getenv("FRESNELKIT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return v;
    }
    return kDefaultSeed;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specfun", "quad", "rod", "fracrod", "plates", "pseudo", "subord"};
    return names;
}

std::vector<VerificationReport> run_suite(const std::string& name) {
    using Suite = std::vector<VerificationReport> (*)(std::uint64_t);
    auto pick = [](const std::string& n) -> Suite {
        if (n == "specfun") return suites::specfun;
        if (n == "quad") return suites::quad;
        if (n == "rod") return suites::rod;
        if (n == "fracrod") return suites::fracrod;
        if (n == "plates") return suites::plates;
        if (n == "pseudo") return suites::pseudo;
        if (n == "subord") return suites::subord;
        return nullptr;
    };
    const std::uint64_t seed = verification_seed();
    std::vector<VerificationReport> out;
    if (name == "all") {
        for (const auto& n : suite_names()) {
            auto part = pick(n)(seed);
            out.insert(out.end(), part.begin(), part.end());
        }
    } else if (Suite s = pick(name)) {
        out = s(seed);
    } else {
        throw UnknownName("unknown suite: " + name);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.check_name < b.check_name; });
    return out;
}

}  // namespace fresnelkit
