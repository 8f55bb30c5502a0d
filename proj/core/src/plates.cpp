#include "fresnelkit/plates.hpp"

#include <algorithm>
#include <cmath>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"
#include "fresnelkit/quad.hpp"

namespace fresnelkit {

namespace {

void check_time(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

void check_radius(double r, const DiskSpec& d) {
    if (!(r > 0 && r < d.R)) throw DomainError("radius must lie in (0, R)");
}

// the two parts of qbar with no domain check, for stencils that touch r = R
double qbar_free(double r, double t) { return std::sin(r * r / (2 * t)) / t; }
double qbar_image(double r, double t, double R) {
    const double R4 = R * R * R * R;
    return std::sin(R4 / (2 * r * r * t)) / t;
}

double relative(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return m > 0 ? std::abs(a + b) / m : 0.0;
}

Residual make_residual(double lhs, double rhs) { return {lhs, rhs, lhs + rhs, relative(lhs, rhs)}; }

double deriv(const RealFn& f, double x, int order, double h) {
    StencilSpec s;
    s.order = order;
    s.step = h;
    s.points = order <= 2 ? 7 : 9;
    return finite_diff(f, x, s);
}

// (d_rr + (1/r) d_r)^2 f = f'''' + 2 f'''/r - f''/r^2 + f'/r^3
double radial_bilaplacian(const RealFn& f, double r, double h) {
    const double f1 = deriv(f, r, 1, h), f2 = deriv(f, r, 2, h), f3 = deriv(f, r, 3, h), f4 = deriv(f, r, 4, h);
    return f4 + 2 * f3 / r - f2 / (r * r) + f1 / (r * r * r);
}

double time_second(const std::function<double(double)>& g, double t) {
    StencilSpec s;
    s.order = 2;
    s.points = 5;
    s.step = 1e-3 * std::max(1.0, t);
    return finite_diff(g, t, s);
}

// radial step scaled to the local wavelength of the image phase
double radial_step(double r, double t, double R) {
    const double k = std::max(r / t, std::pow(R, 4) / (r * r * r * t));
    return std::min(2e-3, 0.08 / std::max(1.0, k));
}

SignedKernel wave_kernel(double phase) {
    SignedKernel k;
    k.identity = "wave";
    k.eval = [phase](double x, double t) { return std::cos(x * x / (2 * t) + phase) / std::sqrt(2 * kPi * t); };
    k.envelope = [phase](double t) {
        Envelope e;
        e.kind = Envelope::Kind::OscillatoryUnit;
        e.waves = {{1.0 / std::sqrt(2 * kPi * t), 0.0, phase}};
        return e;
    };
    return k;
}

}  // namespace

DiskSpec DiskSpec::make(double R) {
    if (!(R > 0) || !std::isfinite(R)) throw DomainError("disk radius must be positive");
    return DiskSpec{R};
}

PolarPoint PolarPoint::make(double r, double theta, const DiskSpec& disk) {
    check_radius(r, disk);
    double th = std::fmod(theta, 2 * kPi);
    if (th < 0) th += 2 * kPi;
    return {r, th};
}

double plate_kernel(const std::vector<double>& xs, double t) {
    if (xs.empty()) throw DomainError("plate_kernel: empty coordinate vector");
    check_time(t);
    double s = 0;
    for (double x : xs) s += x * x;
    const double d = static_cast<double>(xs.size());
    return std::pow(2 * kPi * t, -d / 2) * std::cos(s / (2 * t) - d * kPi / 4);
}

double plate_fourier(const std::vector<double>& betas, double t) {
    if (betas.empty()) throw DomainError("plate_fourier: empty frequency vector");
    check_time(t);
    double s = 0;
    for (double b : betas) s += b * b;
    return std::cos(s * t / 2);
}

cplx plate_fourier_numeric(const std::vector<double>& betas, double t, double tol) {
    if (betas.empty()) throw DomainError("plate_fourier_numeric: empty frequency vector");
    if (betas.size() > 4) throw DimensionGuard("plate_fourier_numeric: quadrature limited to d <= 4");
    check_time(t);
    // u = Re prod (c_j + i s_j), c and s the cos/sin parts of the 1-D kernel
    const auto kc = wave_kernel(-kPi / 4), ks = wave_kernel(-3 * kPi / 4);
    cplx plus = 1.0, minus = 1.0;
    for (double b : betas) {
        const cplx fc = fourier_numeric(kc, b, t, tol), fs = fourier_numeric(ks, b, t, tol);
        plus *= fc + cplx(0, 1) * fs;
        minus *= fc - cplx(0, 1) * fs;
    }
    return 0.5 * (plus + minus);
}

double nonfactorization_gap(double x1, double x2, double t) {
    check_time(t);
    const double u1 = plate_kernel({x1}, t), u2 = plate_kernel({x2}, t);
    return u1 * u2 - 0.5 * plate_kernel({x1, x2}, t) - std::cos((x1 * x1 - x2 * x2) / (2 * t)) / (4 * kPi * t);
}

RadialPair disk_heat_kernels(double r, double t, const DiskSpec& disk) {
    check_time(t);
    check_radius(r, disk);
    const double R4 = std::pow(disk.R, 4);
    const double a = std::exp(-r * r / (2 * t)), b = std::exp(-R4 / (2 * r * r * t));
    return {(a + b) / t, r * a / t + R4 / (r * r * r * t) * b};
}

RadialPair disk_vibration_kernels(double r, double t, const DiskSpec& disk) {
    check_time(t);
    check_radius(r, disk);
    const double R4 = std::pow(disk.R, 4);
    const double a = std::sin(r * r / (2 * t)), b = std::sin(R4 / (2 * r * r * t));
    return {(a + b) / t, r * a / t + R4 / (r * r * r * t) * b};
}

double disk_polar_density(double r, double t, const DiskSpec& disk) {
    return disk_vibration_kernels(r, t, disk).p / (2 * kPi);
}

double disk_density_cartesian(double x, double y, double t, const DiskSpec& disk, CartesianForm which) {
    check_time(t);
    const double s = x * x + y * y;
    if (!(s > 0 && s < disk.R * disk.R)) throw DomainError("point outside the punctured disk");
    const double R4 = std::pow(disk.R, 4);
    const double a = std::sin(s / (2 * t)), b = std::sin(R4 / (2 * t * s * s));
    if (which == CartesianForm::P) return (a + R4 / (s * s * s * s) * b) / (2 * kPi * t);
    return (a + b) / (std::sqrt(s) * 2 * kPi * t);
}

double disk_density_polar_xy(double x, double y, double t, const DiskSpec& disk, CartesianForm which) {
    const double r = std::hypot(x, y);
    const auto k = disk_vibration_kernels(r, t, disk);
    return (which == CartesianForm::P ? k.p : k.q) / (2 * kPi);
}

DiskMass disk_mass(double t, const DiskSpec& disk) {
    check_time(t);
    const double R = disk.R;
    auto f = [t](double r) { return r / t * std::sin(r * r / (2 * t)); };
    detail::GKOptions opt;
    opt.abs_tol = 1e-14;
    const int n = std::clamp(static_cast<int>(R * R / (2 * t)) + 4, 4, 2000);
    const double interior = detail::gk_adaptive<double>(f, detail::linspace_pts(0.0, R, n), opt).value;
    // int_R^inf (r'/t) sin(r'^2/2t) dr' in the Abel sense
    const double image = std::cos(R * R / (2 * t));
    return {interior, image, interior + image};
}

SubstitutionCheck disk_image_substitution(double a, double b, double t, const DiskSpec& disk) {
    check_time(t);
    if (!(a > 0 && b > a && b <= disk.R)) throw DomainError("need 0 < a < b <= R");
    const double R = disk.R, R4 = std::pow(R, 4);
    detail::GKOptions opt;
    opt.abs_tol = 1e-13;
    auto direct = [&](double r) { return R4 / (r * r * r * t) * std::sin(R4 / (2 * r * r * t)); };
    auto mapped = [&](double s) { return s / t * std::sin(s * s / (2 * t)); };
    const double lo = R * R / b, hi = R * R / a;
    const int n = std::clamp(static_cast<int>(hi * hi / (2 * t)) + 8, 8, 4000);
    return {detail::gk_adaptive<double>(direct, detail::linspace_pts(a, b, n), opt).value,
            detail::gk_adaptive<double>(mapped, detail::linspace_pts(lo, hi, n), opt).value};
}

double disk_neumann_derivative(double t, const DiskSpec& disk, double h) {
    check_time(t);
    const double R = disk.R;
    auto q = [&](double r) { return qbar_free(r, t) + qbar_image(r, t, R); };
    StencilSpec s;
    s.order = 1;
    s.step = h;
    s.offsets = {-1, -2, -3, -4, -5, -6};
    return finite_diff(q, R, s);
}

Residual disk_radial_residual(double r, double t, const DiskSpec& disk, RadialTerm term) {
    check_time(t);
    check_radius(r, disk);
    const double R = disk.R;
    auto q = [&](double rr, double tt) {
        double v = 0;
        if (term != RadialTerm::Image) v += qbar_free(rr, tt);
        if (term != RadialTerm::Free) v += qbar_image(rr, tt, R);
        return v;
    };
    const double utt = time_second([&](double tt) { return q(r, tt); }, t);
    const double h = radial_step(r, t, R);
    const double l2 = radial_bilaplacian([&](double rr) { return q(rr, t); }, r, h);
    return make_residual(utt, 0.25 * l2);
}

Residual disk_image_kelvin_residual(double r, double t, const DiskSpec& disk) {
    check_time(t);
    check_radius(r, disk);
    const double R = disk.R, R4 = std::pow(R, 4);
    const double h = radial_step(r, t, R);
    auto v = [&](double rr) { return qbar_image(rr, t, R); };
    // M g = (r^4/R^4)(g'' + g'/r), applied twice with nested stencils
    auto M = [&](const RealFn& g, double rr) {
        return rr * rr * rr * rr / R4 * (deriv(g, rr, 2, h) + deriv(g, rr, 1, h) / rr);
    };
    const RealFn mv = [&](double rr) { return M(v, rr); };
    const double mmv = M(mv, r);
    const double utt = time_second([&](double tt) { return qbar_image(r, tt, R); }, t);
    return make_residual(utt, 0.25 * mmv);
}

Residual plate_pde_residual(double x1, double x2, double t) {
    check_time(t);
    auto u = [](double a, double b, double tt) { return plate_kernel({a, b}, tt); };
    const double h = 4e-3 * std::max(1.0, std::sqrt(t));
    const double uxxxx = deriv([&](double a) { return u(a, x2, t); }, x1, 4, h);
    const double uyyyy = deriv([&](double b) { return u(x1, b, t); }, x2, 4, h);
    const double uxxyy =
        deriv([&](double a) { return deriv([&](double b) { return u(a, b, t); }, x2, 2, h); }, x1, 2, h);
    const double utt = time_second([&](double tt) { return u(x1, x2, tt); }, t);
    return make_residual(utt, 0.25 * (uxxxx + 2 * uxxyy + uyyyy));
}

std::vector<ProfilePoint> disk_profile(double t, const DiskSpec& disk, int n) {
    if (n < 1) throw DomainError("disk_profile: need at least one point");
    std::vector<ProfilePoint> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) {
        const double r = disk.R * i / (n + 1.0);
        const auto k = disk_vibration_kernels(r, t, disk);
        out.push_back({r, k.q, k.p});
    }
    return out;
}

SignedKernel plate_kernel_2d() {
    SignedKernel k;
    k.identity = "plate2d";
    k.params = {{"d", 2}};
    k.eval = [](double x, double t) { return plate_kernel({x, 0.0}, t); };
    k.eval2 = [](double x1, double x2, double t) { return plate_kernel({x1, x2}, t); };
    return k;
}

}  // namespace fresnelkit
