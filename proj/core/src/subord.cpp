#include "fresnelkit/subord.hpp"

#include <algorithm>
#include <cmath>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/fracrod.hpp"
#include "fresnelkit/gk.hpp"
#include "fresnelkit/quad.hpp"
#include "fresnelkit/rod.hpp"
#include "fresnelkit/specfun.hpp"

namespace fresnelkit {

namespace {

void check_time(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

int order_p(IterationDepth d) { return 1 << (d.n + 1); }

double deriv4(const RealFn& f, double x0) {
    StencilSpec s;
    s.order = 4;
    s.points = 7;
    return finite_diff(f, x0, s);
}

}  // namespace

IterationDepth IterationDepth::make(int n) {
    if (n < 0) throw DomainError("iteration depth must be >= 0");
    return IterationDepth{n};
}

double biquadratic_from_subordination(double x, double t) {
    check_time(t);
    const double norm = 2.0 / std::sqrt(2 * kPi * t);
    auto rho = [=](double s) { return norm * std::exp(-s * s / (2 * t)); };
    return fresnel_time_average(x, rho, std::sqrt(90.0 * t), 1e-13);
}

double double_cauchy_density(double x, double t) {
    check_time(t);
    const double x2 = x * x, t2 = t * t;
    return t / (kPi * kSqrt2) * (t2 + x2) / (t2 * t2 + x2 * x2);
}

double double_cauchy_integral(double x, double t) {
    check_time(t);
    auto rho = [=](double s) { return s > 0 ? t * std::exp(-t * t / (2 * s)) / std::sqrt(2 * kPi * s * s * s) : 0.0; };
    return fresnel_time_average(x, rho, INFINITY, 1e-12);
}

double double_cauchy_decomposed(double x, double t) {
    check_time(t);
    const cplx a = t * std::polar(1.0, kPi / 4);
    const cplx z = a / (a * a + x * x);
    return (z + std::conj(z)).real() / (2 * kPi);
}

StencilResidual double_cauchy_pde_residual(double x, double t) {
    check_time(t);
    const double utttt = deriv4([&](double s) { return double_cauchy_density(x, s); }, t);
    const double uxxxx = deriv4([&](double y) { return double_cauchy_density(y, t); }, x);
    const double scale = std::max(std::abs(utttt), std::abs(uxxxx));
    const double res = utttt + uxxxx;
    return {res, scale, scale > 0 ? std::abs(res) / scale : std::abs(res)};
}

double iterated_charfn(double beta, double t, IterationDepth d) {
    const double p = order_p(d);
    return std::cos(2 * t * std::pow(std::abs(beta) / 2, p));
}

double iterated_density(double x, double t, IterationDepth d) {
    check_time(t);
    if (d.n < 0) throw DomainError("iteration depth must be >= 0");
    if (d.n > 3) throw DimensionGuard("iterated_density: depth n <= 3");
    const int p = order_p(d);
    const double c = 2 * t / std::pow(2.0, p);
    // beta = r e^{-i theta}, theta = pi/2p: cos(c beta^p) -> Re e^{-c r^p}
    const double th = kPi / (2 * p);
    const cplx w = std::polar(1.0, -th);
    const double ax = std::abs(x);
    double R = std::pow(40.0 / c, 1.0 / p);
    for (int i = 0; i < 50; ++i) R = std::pow((40.0 + ax * R * std::sin(th)) / c, 1.0 / p);
    auto f = [&](double r) { return (std::cos(ax * r * w) * std::exp(-c * std::pow(r, p)) * w).real(); };
    const int n = std::clamp(static_cast<int>(ax * R * std::cos(th) / kPi) + 8, 8, 4000);
    detail::GKOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-14;
    opt.throw_on_fail = false;
    return detail::gk_adaptive<double>(f, detail::linspace_pts(0.0, R, n), opt).value / kPi;
}

double iterated_direct_n1(double x, double t) {
    check_time(t);
    const double S = 4.0 * std::sqrt(t) + std::abs(x);
    const double norm = 1.0 / std::sqrt(2 * kPi * t);
    auto rho = [=](double s) { return 2 * fresnel_kernel(s, t); };
    const double head = fresnel_time_average(x, rho, S, 1e-11);
    // beyond S: the chirp cos(s^2/2t - pi/4) carries the slowly varying 2 u(x, s)
    const auto tail = integrate_oscillatory(
        Amplitude::power_law([=](double s) { return 2 * norm * fresnel_kernel(x, s); }, 0.5), t, S, INFINITY, 1e-11);
    return head + tail.value;
}

VerificationReport iterated_pde_check(IterationDepth d) {
    if (d.n < 0) throw DomainError("iteration depth must be >= 0");
    const int p = order_p(d);
    const double coef = std::pow(2.0, -2.0 * (p - 1));
    double worst = 0;
    long evals = 0;
    for (double beta : {0.25, 0.5, 1.0, 1.5, 2.0})
        for (double t : {0.1, 0.5, 1.0, 2.0, 3.0}) {
            const double a = std::pow(beta / 2, p);
            const double U = iterated_charfn(beta, t, d);
            const double lhs = -4 * a * a * U;                      // d^2/dt^2 cos(2 t a)
            const double rhs = -coef * std::pow(beta, 2 * p) * U;  // multiplier of the 2^{n+2}-order operator
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            ++evals;
        }
    return make_report("subord.iterated_pde_transform_n" + std::to_string(d.n), worst, 1e-12, evals,
                       "beta in {0.25..2} x t in {0.1..3}");
}

SignedKernel biquadratic_kernel() {
    SignedKernel k;
    k.identity = "biquadratic";
    k.eval = [](double x, double t) { return biquadratic_from_subordination(x, t); };
    // same function as the nu = 1/2 fractional solution at time t/2
    const auto frac = u2nu_kernel(FracOrder::make(0.5));
    k.envelope = [frac](double t) { return frac.envelope_at(t / 2); };
    return k;
}

SignedKernel double_cauchy_kernel() {
    SignedKernel k;
    k.identity = "double-cauchy";
    k.eval = [](double x, double t) { return double_cauchy_density(x, t); };
    k.envelope = [](double t) {
        Envelope e;
        e.kind = Envelope::Kind::PowerLaw;
        e.start = t;
        e.rate = 2;
        e.scale = 1.21 * t / (kPi * kSqrt2);
        e.wavenumber = [](double) { return 0.0; };
        return e;
    };
    return k;
}

SignedKernel iterated_kernel(IterationDepth d) {
    if (d.n < 0 || d.n > 3) throw DimensionGuard("iterated_kernel: depth n <= 3");
    SignedKernel k;
    k.identity = "iterated";
    k.params = {{"n", static_cast<double>(d.n)}};
    k.eval = [d](double x, double t) { return iterated_density(x, t, d); };
    const int p = order_p(d);
    k.envelope = [d, p](double t) {
        Envelope e;
        if (p == 2) {
            e.kind = Envelope::Kind::OscillatoryUnit;
            e.waves = {{1.0 / std::sqrt(2 * kPi * t), 0.0, -kQuarterPi}};
            return e;
        }
        // stationary phase: amplitude ~ |x|^{-(p-2)/(2(p-1))}
        e.kind = Envelope::Kind::PowerLaw;
        e.start = 4.0 * std::pow(t, 1.0 / p);
        e.rate = (p - 2.0) / (2.0 * (p - 1.0));
        double mx = 0;
        for (int i = 0; i <= 40; ++i) mx = std::max(mx, std::abs(iterated_density(e.start * (1 + i / 40.0), t, d)));
        e.scale = 4 * mx;
        return e;
    };
    return k;
}

}  // namespace fresnelkit
