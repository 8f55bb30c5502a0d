#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/fracrod.hpp"
#include "fresnelkit/plates.hpp"
#include "fresnelkit/pseudo.hpp"
#include "fresnelkit/quad.hpp"
#include "fresnelkit/rod.hpp"
#include "fresnelkit/specfun.hpp"
#include "fresnelkit/subord.hpp"
#include "fresnelkit/verify.hpp"
#include "suites.hpp"

namespace fresnelkit::suites {

namespace {

using Reports = std::vector<VerificationReport>;

std::string seed_note(std::uint64_t seed, const std::string& extra) {
    return "seed=" + std::to_string(seed) + "; " + extra;
}

double uniform(std::mt19937_64& g, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(g);
}

double stencil(const RealFn& f, double x0, int order, double step, std::vector<double> offsets = {}) {
    StencilSpec s;
    s.order = order;
    s.step = step;
    s.offsets = std::move(offsets);
    return finite_diff(f, x0, s);
}

const Box kRodBox{0.3, 3.0, 0.5, 2.0};

}  // namespace

Reports specfun(std::uint64_t seed) {
    Reports out;
    std::mt19937_64 g(seed);

    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const cplx z(uniform(g, 0.01, 0.99), uniform(g, -3, 3));
        const cplx ref = kPi / std::sin(kPi * z);
        worst = std::max(worst, std::abs(gamma(z) * gamma(1.0 - z) - ref) / std::abs(ref));
    }
    out.push_back(make_report("specfun.gamma_reflection", worst, 1e-12, 200,
                              seed_note(seed, "Re z in (0,1), Im z in (-3,3)")));

    worst = 0;
    for (int i = 1; i <= 200; ++i) {
        const double x = 0.05 * i;
        const auto p = fresnel_cs(x), m = fresnel_cs(-x);
        worst = std::max({worst, std::abs(p.C + m.C), std::abs(p.S + m.S)});
    }
    out.push_back(make_report("specfun.fresnel_parity", worst, 0.0, 400, "x = 0.05..10"));

    worst = 0;
    for (int i = 0; i < 50; ++i) {
        const cplx z = std::polar(5 * std::sqrt(uniform(g, 0, 1)), uniform(g, -kPi, kPi));
        worst = std::max(worst, std::abs(mittag_leffler(1.0, z) - std::exp(z)) / std::exp(std::abs(z)));
    }
    out.push_back(make_report("specfun.mittag_leffler_exp", worst, 1e-12, 50, seed_note(seed, "|z| <= 5")));

    worst = 0;
    long ev = 0;
    for (double x : {0.5, 1.0, 2.0}) {
        const RealFn ai = [&](double s) {
            ++ev;
            return airy_ai(s);
        };
        worst = std::max(worst, std::abs(stencil(ai, x, 2, 1e-3) - x * airy_ai(x)));
    }
    out.push_back(make_report("specfun.airy_ode", worst, 1e-6, ev, "Ai'' - x Ai at x = 0.5, 1, 2"));
    return out;
}

Reports quad(std::uint64_t seed) {
    Reports out;
    std::mt19937_64 g(seed + 1);

    double worst = 0;
    long ev = 0;
    for (int i = 0; i < 10; ++i) {
        const double c1 = uniform(g, 0.5, 4), c2 = uniform(g, -1, 1), c3 = uniform(g, -1, 1);
        const double a = uniform(g, -2, 2), b = uniform(g, -2, 2);
        const double lo = uniform(g, -1, 0), hi = uniform(g, 1, 3);
        const RealFn f = [=](double x) { return std::sin(c1 * x) + c2 * x * x; };
        const RealFn h = [=](double x) { return std::exp(c3 * x); };
        const RealFn comb = [=](double x) { return a * f(x) + b * h(x); };
        const auto rf = integrate_adaptive(f, lo, hi, 1e-12), rh = integrate_adaptive(h, lo, hi, 1e-12);
        const auto rc = integrate_adaptive(comb, lo, hi, 1e-12);
        ev += rf.evaluations + rh.evaluations + rc.evaluations;
        const double dev = std::abs(rc.value - a * rf.value - b * rh.value);
        const double budget = 2 * (rc.err_estimate + std::abs(a) * rf.err_estimate + std::abs(b) * rh.err_estimate);
        // round-off floor for the final additions
        const double floor = 8e-16 * (std::abs(a * rf.value) + std::abs(b * rh.value) + std::abs(rc.value));
        worst = std::max(worst, dev / std::max(budget, floor));
    }
    out.push_back(make_report("quad.linearity", worst, 1.0, ev,
                              seed_note(seed + 1, "deviation over twice the combined error estimates")));

    worst = 0;
    ev = 0;
    for (double t : {0.5, 1.0, 3.0})
        for (auto [a, b] : {std::pair{-2.0, 1.0}, std::pair{0.0, 5.0}, std::pair{1.5, 9.0}}) {
            const auto r = integrate_oscillatory(Amplitude::unit(), t, a, b, 1e-13);
            ev += r.evaluations;
            // w = sqrt(2t) v: int cos(v^2 - pi/4) = (C + S)/sqrt 2
            const double s = std::sqrt(2 * t);
            const auto fa = fresnel_cs(a / s), fb = fresnel_cs(b / s);
            const double ref = s * ((fb.C - fa.C) + (fb.S - fa.S)) / kSqrt2;
            worst = std::max(worst, std::abs(r.value - ref));
        }
    out.push_back(make_report("quad.oscillatory_closed_form", worst, 1e-10, ev, "unit amplitude, finite ranges"));

    const RealFn ex = [](double x) { return std::exp(x); };
    const double x0 = 0.7, h = 1e-2;
    const double e1 = std::abs(stencil(ex, x0, 1, h) - std::exp(x0));
    const double e2 = std::abs(stencil(ex, x0, 1, h / 2) - std::exp(x0));
    out.push_back(make_report("quad.stencil_order", e2 / e1, 1 / 3.5, 6,
                              "error ratio e(h/2)/e(h), central first derivative of exp"));
    return out;
}

Reports rod(std::uint64_t) {
    Reports out;
    const double y = 1.0;

    out.push_back(pde_residual_scan(free_kernel(), PdeOp::Rod, kRodBox, 5, "rod.pde.free"));
    out.push_back(
        pde_residual_scan(halfline_kernel(BoundarySpec::absorbing(y)), PdeOp::Rod, kRodBox, 5, "rod.pde.absorbing"));
    out.push_back(pde_residual_scan(halfline_kernel(BoundarySpec::reflecting(y)), PdeOp::Rod, kRodBox, 5,
                                    "rod.pde.reflecting"));
    out.push_back(pde_residual_scan(halfline_kernel(BoundarySpec::elastic(1.0, y)), PdeOp::Rod, kRodBox, 5,
                                    "rod.pde.elastic_a1"));
    out.push_back(pde_residual_scan(drift_kernel({0.5}), PdeOp::Rod, kRodBox, 5, "rod.pde.drift_mu0.5"));
    {
        // the same kernel with half the exponential rate and a quarter of the phase shift
        SignedKernel k;
        k.identity = "drift-halfrate";
        k.params = {{"mu_drift", 0.5}};
        k.eval = [](double x, double t) {
            const double m = 0.5;
            return std::exp(m * x / 2) * std::cos(x * x / (2 * t) - m * m * t / 8 - kQuarterPi) /
                   std::sqrt(2 * kPi * t);
        };
        auto r = pde_residual_scan(k, PdeOp::Rod, kRodBox, 5, "rod.pde.drift_mu0.5_halfrate");
        r.notes += "; kernel e^{mu x/2} cos(x^2/2t - mu^2 t/8 - pi/4)/sqrt(2 pi t)";
        out.push_back(r);
    }

    double worst = 0;
    long ev = 0;
    for (double t : {1.0, 20.0, 40.0, 60.0}) {
        const double L = 6 * std::sqrt(t);
        const auto core = integrate_adaptive([t](double x) { return fresnel_kernel(x, t); }, -L, L, 1e-13);
        ev += core.evaluations;
        const double tails = 2 * fresnel_wave_integral(t, L, INFINITY) / std::sqrt(2 * kPi * t);
        worst = std::max(worst, std::abs(core.value + tails - 1));
    }
    out.push_back(make_report("rod.normalization", worst, 1e-10, ev, "t = 1, 20, 40, 60; quadrature core, closed tails"));

    worst = 0;
    ev = 0;
    const auto fk = free_kernel();
    for (double beta : {0.5, 1.0, 1.5, 2.0})
        for (double t : {0.5, 1.0}) {
            worst = std::max(worst, std::abs(fourier_numeric(fk, beta, t, 1e-10).real() - std::cos(beta * beta * t / 2)));
            ++ev;
        }
    out.push_back(make_report("rod.fourier_transform", worst, 1e-6, ev, "beta 0.5..2, t 0.5, 1"));

    worst = 0;
    for (double beta : {0.5, 1.0, 2.0}) {
        const RealFn U = [beta](double t) { return std::cos(beta * beta * t / 2); };
        worst = std::max(worst, std::abs(stencil(U, 0.0, 1, 1e-3, {0, 1, 2, 3, 4})));
    }
    out.push_back(make_report("rod.initial_velocity", worst, 1e-6, 15, "one-sided d/dt of cos(beta^2 t/2) at t = 0"));

    {
        const double t = 1;
        std::vector<double> areas;
        double bound_ratio = 0;
        ev = 0;
        for (int k = 0; k <= 11; ++k) {
            const double a = fresnel_root(k, t), b = fresnel_root(k + 1, t);
            const auto r = integrate_adaptive([t](double x) { return fresnel_kernel(x, t); }, a, b, 1e-14);
            ev += r.evaluations;
            areas.push_back(std::abs(r.value));
            if (k <= 10) bound_ratio = std::max(bound_ratio, std::abs(r.value) / (2 * std::sqrt(t / (2 * kPi)) / a));
        }
        double rise = 0;
        for (int k = 0; k < 11; ++k) rise = std::max(rise, areas[k + 1] - areas[k]);
        out.push_back(make_report("rod.root_area_bound", bound_ratio, 1.0, ev, "area over (2/alpha_k) sqrt(t/2pi), k = 0..10"));
        out.push_back(make_report("rod.root_area_decreasing", rise, 0.0, ev, "largest increase of |area| over k = 0..11"));
    }

    worst = 0;
    for (double t : {0.5, 1.0, 2.0, 5.0})
        worst = std::max(worst, std::abs(halfline_solution(0.0, t, BoundarySpec::absorbing(y))));
    out.push_back(make_report("rod.boundary_absorbing", worst, 1e-14, 4, "u(0, t), t = 0.5..5"));

    const std::vector<double> right{0, 1, 2, 3, 4, 5, 6};
    worst = 0;
    for (double t : {0.5, 1.0, 2.0}) {
        const auto b = BoundarySpec::reflecting(y);
        worst = std::max(worst, std::abs(stencil([&](double x) { return halfline_solution(x, t, b); }, 0.0, 1, 1e-3, right)));
    }
    out.push_back(make_report("rod.boundary_reflecting", worst, 1e-6, 21, "one-sided u_x at 0"));

    worst = 0;
    for (double alpha : {0.5, 2.0})
        for (double t : {0.5, 1.0, 2.0}) {
            const auto b = BoundarySpec::elastic(alpha, y);
            const double ux = stencil([&](double x) { return halfline_solution(x, t, b); }, 0.0, 1, 1e-3, right);
            worst = std::max(worst, std::abs(ux - alpha * halfline_solution(0.0, t, b)));
        }
    out.push_back(make_report("rod.boundary_elastic", worst, 1e-4, 48, "|u_x - alpha u| at 0, alpha = 0.5, 2"));

    double gap_abs = 0, gap_ref = 0;
    const double xs[] = {0.25, 0.5, 1.0, 1.5, 2.5};
    for (double x : xs) {
        gap_abs = std::max(gap_abs, std::abs(halfline_solution(x, 1, BoundarySpec::elastic(1e3, y)) -
                                             halfline_solution(x, 1, BoundarySpec::absorbing(y))));
        gap_ref = std::max(gap_ref, std::abs(halfline_solution(x, 1, BoundarySpec::elastic(1e-3, y)) -
                                             halfline_solution(x, 1, BoundarySpec::reflecting(y))));
    }
    out.push_back(make_report("rod.elastic_limit_absorbing", gap_abs, 1e-2, 10, "alpha = 1e3, t = 1, y = 1"));
    out.push_back(make_report("rod.elastic_limit_reflecting", gap_ref, 1e-2, 10, "alpha = 1e-3, t = 1, y = 1"));

    worst = 0;
    for (double x : xs)
        for (double alpha : {0.5, 2.0})
            worst = std::max(worst, std::abs(elastic_form1(x, 1, alpha, y) - elastic_form2(x, 1, alpha, y)));
    out.push_back(make_report("rod.elastic_forms_agree", worst, 1e-9, 20, "two integral representations"));
    return out;
}

Reports fracrod(std::uint64_t) {
    Reports out;
    for (double nu : {0.4, 0.6, 0.8, 1.0}) {
        const auto o = FracOrder::make(nu);
        const auto k = u2nu_kernel(o);
        double worst = 0, mass = 0;
        for (double beta : {0.5, 1.0})
            for (double t : {0.5, 1.0})
                worst = std::max(worst, std::abs(fourier_numeric(k, beta, t, 1e-10).real() - u2nu_fourier(beta, t, o)));
        for (double t : {0.5, 1.0}) mass = std::max(mass, std::abs(fourier_numeric(k, 0.0, t, 1e-10).real() - 1));
        char tag[16];
        std::snprintf(tag, sizeof tag, "nu%.1f", nu);
        out.push_back(make_report(std::string("fracrod.fourier_") + tag, worst, 1e-5, 4, "beta, t in {0.5, 1}"));
        out.push_back(make_report(std::string("fracrod.mass_") + tag, mass, 1e-6, 2, "t = 0.5, 1"));
    }

    double worst = 0;
    for (double nu : {0.3, 0.5, 0.7, 1.0})
        for (double x : {0.1, 0.7, 1.3, 2.9})
            worst = std::max(worst, std::abs(u2nu_series(x, 1, FracOrder::make(nu)) - u2nu_series(-x, 1, FracOrder::make(nu))));
    out.push_back(make_report("fracrod.evenness", worst, 0.0, 32, "u(-x) - u(x)"));

    {
        // nu = 1/2: u_t = -(1/4) u_xxxx
        const auto o = FracOrder::make(0.5);
        long ev = 0;
        worst = 0;
        for (double x : {0.3, 1.0, 2.0})
            for (double t : {0.5, 1.0, 2.0}) {
                auto fx = [&](double s) {
                    ++ev;
                    return u2nu_series(s, t, o);
                };
                auto ft = [&](double s) {
                    ++ev;
                    return u2nu_series(x, s, o);
                };
                const double lhs = stencil(ft, t, 1, 0), rhs = stencil(fx, x, 4, 0) / 4;
                worst = std::max(worst, std::abs(lhs + rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}));
            }
        out.push_back(make_report("fracrod.pde_nu0.5", worst, 1e-4, ev, "u_t + u_xxxx/4 on x 0.3..2, t 0.5..2"));
    }

    auto grid11 = [](auto&& f) {
        double w = 0;
        for (int i = 0; i <= 10; ++i) w = std::max(w, f(-3.0 + 0.6 * i));
        return w;
    };
    out.push_back(make_report("fracrod.series_vs_fresnel",
                              grid11([](double x) { return std::abs(u2nu_series(x, 1, FracOrder::make(1)) - fresnel_kernel(x, 1)); }),
                              1e-10, 11, "nu = 1, t = 1"));
    out.push_back(make_report(
        "fracrod.series_vs_bernstein",
        grid11([](double x) { return std::abs(u2nu_series(x, 1, FracOrder::make(0.5)) - bernstein_integral(x, 1)); }),
        1e-8, 11, "nu = 1/2, t = 1"));
    out.push_back(make_report(
        "fracrod.series_vs_airy",
        grid11([](double x) { return std::abs(u2nu_series(x, 1, FracOrder::make(2.0 / 3)) - u_fourthirds_airy(x, 1)); }),
        1e-8, 11, "nu = 2/3, t = 1"));
    out.push_back(make_report("fracrod.series_vs_subordination", grid11([](double x) {
                                  const auto o = FracOrder::make(1.0 / 3);
                                  return std::abs(u2nu_series(x, 1, o) - u_subordinate(x, 1, o, {1}));
                              }),
                              1e-6, 11, "nu = 1/3, t = 1, lambda = 1"));

    worst = 0;
    long ev = 0;
    const struct {
        double x, mu, nu;
    } lp[] = {{0.5, 2.0, 0.6}, {1.0, 1.0, 1.0}, {0.3, 1.5, 0.5}, {1.2, 3.0, 0.8}};
    for (const auto& p : lp) {
        const auto o = FracOrder::make(p.nu);
        const auto r = laplace_numeric([&](double t) { return u2nu_eval(p.x, t, o); }, p.mu, 1e-10);
        ev += r.evaluations;
        worst = std::max(worst, std::abs(r.value - u2nu_laplace_closed(p.x, p.mu, o)));
    }
    out.push_back(make_report("fracrod.laplace", worst, 1e-5, ev, "four (x, mu, nu) points"));
    return out;
}

Reports plates(std::uint64_t seed) {
    Reports out;
    out.push_back(pde_residual_scan(plate_kernel_2d(), PdeOp::Plate2D, {0.3, 1.5, 0.5, 2.0}, 3, "plates.pde_2d"));

    const auto disk = DiskSpec::make(1.0);
    auto radial = [&](RadialTerm term) {
        double w = 0;
        for (double r : {0.3, 0.45, 0.6, 0.75, 0.9})
            for (double t : {0.5, 1.0}) w = std::max(w, disk_radial_residual(r, t, disk, term).relative);
        return w;
    };
    out.push_back(make_report("plates.radial_residual_qbar", radial(RadialTerm::Both), 1e-2, 10,
                              "full qbar under u_tt + L^2 u/4, r = 0.3R..0.9R, t = 0.5, 1"));
    out.push_back(make_report("plates.radial_residual_free_term", radial(RadialTerm::Free), 1e-2, 10,
                              "sin(r^2/2t)/t alone"));
    double kel = 0;
    for (double r : {0.3, 0.45, 0.6, 0.75, 0.9})
        for (double t : {0.5, 1.0}) kel = std::max(kel, disk_image_kelvin_residual(r, t, disk).relative);
    out.push_back(make_report("plates.image_term_kelvin_residual", kel, 1e-2, 10,
                              "image term under the (r^4/R^4)-scaled Laplacian squared"));

    double worst = 0;
    for (double t : {0.5, 1.0, 5.0}) worst = std::max(worst, std::abs(disk_mass(t, disk).total - 1));
    out.push_back(make_report("plates.disk_mass", worst, 1e-6, 3, "R = 1, t = 0.5, 1, 5"));

    worst = 0;
    for (double t : {0.5, 1.0, 50.0, 100.0}) worst = std::max(worst, std::abs(disk_neumann_derivative(t, disk)));
    out.push_back(make_report("plates.disk_neumann", worst, 1e-6, 24, "d qbar/dr at r = R"));

    worst = 0;
    for (double t : {0.5, 1.0, 2.0}) worst = std::max(worst, std::abs(plate_fourier_numeric({0.0, 0.0}, t) - 1.0));
    out.push_back(make_report("plates.normalization_2d", worst, 1e-6, 3, "transform at beta = 0"));

    worst = 0;
    for (auto b : {std::vector<double>{0.5, 1.0, 0.7}, std::vector<double>{1.2, 0.3, 0.0}})
        worst = std::max(worst, std::abs(plate_fourier_numeric(b, 1.0) - plate_fourier(b, 1.0)));
    out.push_back(make_report("plates.fourier_3d", worst, 1e-6, 2, "t = 1"));

    std::mt19937_64 g(seed + 4);
    worst = 0;
    for (int i = 0; i < 100; ++i) {
        const double x1 = uniform(g, -3, 3), x2 = uniform(g, -3, 3), t = uniform(g, 0.5, 3);
        worst = std::max(worst, std::abs(nonfactorization_gap(x1, x2, t)));
    }
    out.push_back(make_report("plates.nonfactorization", worst, 1e-14, 100, seed_note(seed + 4, "100 (x1, x2, t)")));
    return out;
}

Reports pseudo(std::uint64_t seed) {
    Reports out;
    std::mt19937_64 g(seed + 5);
    for (int n : {2, 3}) {
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            std::vector<double> ts, xs;
            double t = 0;
            for (int j = 0; j < n; ++j) {
                t += uniform(g, 0.3, 1.5);
                ts.push_back(t);
                xs.push_back(uniform(g, -2, 2));
            }
            const auto full = PathGrid::make(ts, xs);
            ts.pop_back();
            xs.pop_back();
            worst = std::max(worst, std::abs(marginalize_last(full) - npoint_density(PathGrid::make(ts, xs))));
        }
        out.push_back(make_report("pseudo.marginalize_n" + std::to_string(n), worst, 1e-6, 10,
                                  seed_note(seed + 5, "10 random grids")));
    }

    double worst = 0;
    for (auto ts : {std::vector<double>{0.5, 1.3}, std::vector<double>{1.0, 2.0}}) {
        const auto c = CylinderSet::make(ts, {{-INFINITY, INFINITY}, {-INFINITY, INFINITY}});
        worst = std::max(worst, std::abs(cylinder_measure(c) - 1));
    }
    out.push_back(make_report("pseudo.two_point_mass", worst, 1e-6, 2, "full-plane cylinder"));

    worst = 0;
    for (int n = 1; n <= 10; ++n) {
        const auto s = superposition_expand(n);
        double sum = s.delta_weight;
        for (const auto& c : s.components) sum += c.first;
        worst = std::max(worst, std::abs(sum - 1));
    }
    out.push_back(make_report("pseudo.superposition_weights", worst, 1e-15, 10, "n = 1..10"));

    worst = 0;
    for (int n = 1; n <= 5; ++n) {
        const auto s = superposition_expand(n);
        for (double beta : {0.3, 1.0, 1.7})
            for (double t : {0.5, 1.0, 2.5})
                worst = std::max(worst, std::abs(superposition_eval(s, beta, t) - std::pow(std::cos(beta * beta * t / 2), n)));
    }
    out.push_back(make_report("pseudo.superposition_identity", worst, 1e-13, 45, "n <= 5"));

    {
        const auto w = self_convolution_numeric(2.0, 1.0, 40.0);
        out.push_back(make_report("pseudo.self_convolution", std::abs(w.value - self_convolution(2.0, 1.0).regular),
                                  1e-4, 1, "x = 2, t = 1, window " + std::to_string(w.window)));
    }

    {
        const double c = 0.5;
        const auto p = Potential::constant(c);
        double corr = 0, printed = 0;
        for (double x : {0.0, 1.0})
            for (double t : {0.5, 1.0, 2.0}) {
                const auto r = feynman_kac_pde_residual(p, [c](double, double tt) { return feynman_kac_halfsum(c, 0, tt); }, x, t);
                corr = std::max(corr, std::abs(r.corrected));
                printed = std::max(printed, std::abs(r.printed));
            }
        char note[96];
        std::snprintf(note, sizeof note, "constant k = 0.5, w = cos(ct); printed operator residual %.6g", printed);
        out.push_back(make_report("pseudo.feynman_kac_halfsum_residual", corr, 1e-6, 6, note));
    }
    return out;
}

Reports subord(std::uint64_t) {
    Reports out;

    long bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const double x = -100 + 200.0 * i / 9999;
        if (!(double_cauchy_density(x, 1) > 0)) ++bad;
    }
    out.push_back(make_report("subord.double_cauchy_positivity", static_cast<double>(bad), 0.0, 10000,
                              "count of non-positive samples, |x| <= 100, t = 1"));

    auto argmax = [](double t) {
        const long n = std::lround(5 * t / 1e-3);
        double best = -1, at = 0;
        for (long i = -n; i <= n; ++i) {
            const double v = double_cauchy_density(i * 1e-3, t);
            if (v > best) best = v, at = i * 1e-3;
        }
        return at;
    };
    auto argmax_neg = [](double t) {
        const long n = std::lround(5 * t / 1e-3);
        double best = -1, at = 0;
        for (long i = n; i >= -n; --i) {
            const double v = double_cauchy_density(i * 1e-3, t);
            if (v > best) best = v, at = i * 1e-3;
        }
        return at;
    };
    {
        const double a = argmax(1), b = argmax_neg(1);
        const double m = std::abs(a) < 1e-3 ? 1.0 : std::abs(a + b);
        out.push_back(make_report("subord.double_cauchy_two_maxima", m, 1e-12, 20002,
                                  "maxima at " + std::to_string(a) + ", " + std::to_string(b)));
        double w = 0;
        for (double t : {2.0, 4.0}) w = std::max(w, std::abs(std::abs(argmax(t)) / (t * std::abs(a)) - 1));
        out.push_back(make_report("subord.double_cauchy_maxima_scaling", w, 0.02, 60000, "t = 1, 2, 4"));
    }

    {
        double w = 0;
        for (double t : {0.5, 1.0, 2.0}) {
            const double x = 1e3 * t;
            w = std::max(w, std::abs(x * x * double_cauchy_density(x, t) / (t / (kPi * kSqrt2)) - 1));
        }
        out.push_back(make_report("subord.double_cauchy_tail", w, 0.01, 3, "x^2 u at x = 1000 t"));
    }

    {
        const auto k = biquadratic_kernel();
        double w = 0;
        const std::pair<double, double> pairs[] = {{0.5, 0.5}, {1.0, 0.5}, {1.5, 0.5}, {0.5, 1.0}, {1.0, 1.0}, {1.5, 1.0}};
        for (auto [beta, t] : pairs)
            w = std::max(w, std::abs(fourier_numeric(k, beta, t, 1e-10).real() - std::exp(-std::pow(beta, 4) * t / 8)));
        out.push_back(make_report("subord.biquadratic_fourier", w, 1e-5, 6, "six (beta, t) pairs"));
    }

    {
        const auto k = double_cauchy_kernel();
        double w = 0;
        for (double t : {0.5, 1.0, 2.0}) w = std::max(w, std::abs(fourier_numeric(k, 0.0, t, 1e-11).real() - 1));
        out.push_back(make_report("subord.double_cauchy_mass", w, 1e-8, 3, "t = 0.5, 1, 2"));
    }

    out.push_back(pde_residual_scan(double_cauchy_kernel(), PdeOp::Biharmonic4t4x, {0.0, 2.0, 0.5, 2.0}, 5,
                                    "subord.double_cauchy_biharmonic"));
    out.push_back(pde_residual_scan(biquadratic_kernel(), PdeOp::BiquadraticHeat, kRodBox, 5,
                                    "subord.biquadratic_heat"));

    {
        double w = 0;
        for (double x : {0.0, 0.3, 1.0, 2.5, 10.0})
            for (double t : {0.5, 1.0, 3.0})
                w = std::max(w, std::abs(double_cauchy_density(x, t) - double_cauchy_decomposed(x, t)));
        out.push_back(make_report("subord.double_cauchy_decomposition", w, 1e-12, 15, "complex-pair form"));
    }

    for (int n = 0; n <= 3; ++n) out.push_back(iterated_pde_check(IterationDepth::make(n)));
    return out;
}

}  // namespace fresnelkit::suites
