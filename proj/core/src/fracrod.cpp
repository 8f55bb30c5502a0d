#include "fresnelkit/fracrod.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"
#include "fresnelkit/rod.hpp"

namespace fresnelkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_time(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

// cos((m+1) pi/4) from a table, exact zeros
double cos_quarter(int m) {
    static constexpr double tab[8] = {1.0, 0.70710678118654752440, 0.0, -0.70710678118654752440,
                                      -1.0, -0.70710678118654752440, 0.0, 0.70710678118654752440};
    return tab[(m + 1) % 8];
}

// Neumaier sum
struct KSum {
    double s = 0, c = 0;
    void add(double v) {
        const double t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

// Exponential bound past the point where a |x|^q = 12, prefactor taken from samples with a 4x margin.
Envelope stretched_envelope(const std::function<double(double)>& f, double a, double q) {
    Envelope e;
    e.kind = Envelope::Kind::Exponential;
    e.start = std::pow(12.0 / a, 1.0 / q);
    e.rate = a * q * std::pow(e.start, q - 1.0);
    double mx = 0;
    const double span = 4.0 / e.rate;
    for (int i = 0; i <= 80; ++i) mx = std::max(mx, std::abs(f(e.start + span * i / 80.0)));
    e.scale = 4.0 * mx + 1e-300;
    return e;
}

// decay constant of M_mu(z) ~ exp(-B z^{1/(1-mu)})
double mwright_decay(double mu) { return (1.0 - mu) * std::pow(mu, mu / (1.0 - mu)); }

}  // namespace

FracOrder FracOrder::make(double nu) {
    if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("fractional order nu must lie in (0, 1]");
    return FracOrder{nu};
}

SeriesDiagnostics u2nu_series_diag(double x, double t, FracOrder o, const SeriesControl& ctl) {
    check_time(t);
    o = FracOrder::make(o.nu);
    const double nu = o.nu;
    const double tau = std::pow(t, nu / 2.0);
    const double pref = 1.0 / (kPi * kSqrt2 * tau);
    const double z = kSqrt2 * std::abs(x) / tau;
    const double lz = z > 0 ? std::log(z) : 0.0;
    KSum sum;
    double max_term = 0;
    int small = 0, m = 0;
    for (; m < ctl.max_terms; ++m) {
        if (m > 0 && z == 0.0) break;
        const double mag = std::exp(m * lz - log_abs_gamma(m + 1.0) + log_abs_gamma((m + 1) * nu / 2.0));
        const double term = ((m & 1) ? -mag : mag) * cos_quarter(m) * sinpi((m + 1) * nu / 2.0);
        sum.add(term);
        max_term = std::max(max_term, std::abs(term));
        if (mag <= ctl.rel_tol * std::max(1.0, std::abs(sum.value()))) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    if (m >= ctl.max_terms) throw BudgetExceeded("u2nu_series: max_terms reached");
    return {pref * sum.value(), pref * max_term, m + 1};
}

double u2nu_series(double x, double t, FracOrder o, const SeriesControl& ctl) {
    const auto d = u2nu_series_diag(x, t, o, ctl);
    const double pref = 1.0 / (kPi * kSqrt2 * std::pow(t, o.nu / 2.0));
    if (d.max_term * kEps > 1e-9 * pref)
        throw RangeError("u2nu_series: |x|/t^{nu/2} = " + std::to_string(std::abs(x) / std::pow(t, o.nu / 2.0)) +
                         " loses double precision (largest term " + std::to_string(d.max_term / pref) + ")");
    return d.value;
}

double u2nu_wright(double x, double t, FracOrder o) {
    check_time(t);
    o = FracOrder::make(o.nu);
    const double tau = std::pow(t, o.nu / 2.0);
    const cplx ray = std::polar(1.0, kPi / 4.0);
    const cplx z = kSqrt2 * std::abs(x) / tau * ray;
    return (ray * m_wright(o.nu / 2.0, z)).real() / (kSqrt2 * tau);
}

double u2nu_eval(double x, double t, FracOrder o) {
    check_time(t);
    o = FracOrder::make(o.nu);
    if (o.nu == 1.0) return fresnel_kernel(x, t);
    const double tau = std::pow(t, o.nu / 2.0);
    const double z = kSqrt2 * std::abs(x) / tau;
    if (z <= 6.0) {
        const auto d = u2nu_series_diag(x, t, o);
        const double pref = 1.0 / (kPi * kSqrt2 * tau);
        if (d.max_term < 1e2 * pref) return d.value;
    }
    return u2nu_wright(x, t, o);
}

double u2nu_fourier(double beta, double t, FracOrder o) {
    check_time(t);
    o = FracOrder::make(o.nu);
    const double z = beta * beta * std::pow(t, o.nu) / 2.0;
    const cplx s = 0.5 * (mittag_leffler(o.nu, cplx(0.0, z)) + mittag_leffler(o.nu, cplx(0.0, -z)));
    if (std::abs(s.imag()) > 1e-12) throw NonConvergence("u2nu_fourier: half-sum not real");
    return s.real();
}

double u2nu_laplace_closed(double x, double mu_L, FracOrder o) {
    if (!(mu_L > 0)) throw DomainError("u2nu_laplace_closed: mu must be positive");
    o = FracOrder::make(o.nu);
    const double m = std::pow(mu_L, o.nu / 2.0);
    const double ax = std::abs(x);
    return std::pow(mu_L, o.nu / 2.0 - 1.0) * std::exp(-ax * m) * std::cos(ax * m - kPi / 4.0) / kSqrt2;
}

double bernstein_integral(double x, double t) {
    check_time(t);
    const double Y = std::pow(180.0 / t, 0.25);
    const int n = std::clamp(static_cast<int>(std::ceil(std::abs(x) * Y / kPi)) + 8, 8, 4000);
    detail::GKOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-14;
    opt.throw_on_fail = false;
    const auto r = detail::gk_adaptive<double>(
        [&](double y) { return std::exp(-y * y * y * y * t / 4.0) * std::cos(x * y); }, detail::linspace_pts(0, Y, n),
        opt);
    return r.value / kPi;
}

double bernstein_series(double x, double t) {
    check_time(t);
    const double q = std::pow(t, 0.25);
    const double z = std::abs(x) / q;
    if (z > 8.0) throw BudgetExceeded("bernstein_series: |x|/t^{1/4} > 8 outside the series budget");
    const double h = z / 2.0;
    const double lh = h > 0 ? std::log(h) : 0.0;
    KSum sum;
    int small = 0;
    for (int k = 0; k < 500; ++k) {
        if (k > 0 && h == 0.0) break;
        const double mag = std::exp(2 * k * lh - log_abs_gamma(k + 1.0) - log_abs_gamma(k / 2.0 + 0.75));
        sum.add((k & 1) ? -mag : mag);
        if (mag <= 1e-17 * std::max(1.0, std::abs(sum.value()))) {
            if (++small >= 2) break;
        } else {
            small = 0;
        }
    }
    return sum.value() / (2.0 * q);
}

double biquadratic_bernstein(double x, double t) {
    const double s = bernstein_series(x, t);
    const double i = bernstein_integral(x, t);
    if (std::abs(s - i) > 1e-9) throw NonConvergence("biquadratic_bernstein: series and integral disagree");
    return s;
}

double u_fourthirds_airy(double x, double t) {
    check_time(t);
    const double c = std::cbrt(3.0 * t);
    const cplx ray = std::polar(1.0, kPi / 4.0);
    const cplx z = kSqrt2 * std::abs(x) / c * ray;
    const cplx pair = ray * airy_ai(z) + std::conj(ray) * airy_ai(std::conj(z));
    if (std::abs(pair.imag()) > 1e-12 * std::max(1.0, std::abs(pair))) throw NonConvergence("airy pair not real");
    return 3.0 / (2.0 * kSqrt2 * c) * pair.real();
}

double fracdiff_wright(double x, double t, FracOrder o, Diffusivity d) {
    check_time(t);
    o = FracOrder::make(o.nu);
    if (!(d.lam > 0)) throw DomainError("diffusivity must be positive");
    const double lt = d.lam * std::pow(t, o.nu / 2.0);
    return m_wright(o.nu / 2.0, std::abs(x) / lt) / (2.0 * lt);
}

double u_subordinate(double x, double t, FracOrder o, Diffusivity d) {
    check_time(t);
    if (!(d.lam > 0)) throw DomainError("diffusivity must be positive");
    const double lam = d.lam;
    if (o.nu == 0.5) {
        // folded Gaussian
        auto rho = [=](double s) { return std::exp(-s * s / (4.0 * lam * lam * t)) / (lam * std::sqrt(kPi * t)); };
        return fresnel_time_average(x, rho, lam * std::sqrt(4.0 * t * 45.0), 1e-13);
    }
    if (std::abs(o.nu - 1.0 / 3.0) < 1e-14) {
        const double c = lam * std::cbrt(3.0 * t);
        // folded Airy density 2 v_{2/3}
        auto rho = [=](double s) { return 3.0 / c * airy_ai(s / c); };
        return fresnel_time_average(x, rho, 15.0 * c, 1e-13);
    }
    throw UnsupportedOrder("u_subordinate: closed time density available only for nu = 1/3 and nu = 1/2");
}

namespace {

SignedKernel make_frac_kernel(std::string id, double nu, double time_scale_power_lam,
                              std::function<double(double, double)> f) {
    SignedKernel k;
    k.identity = std::move(id);
    k.params = {{"nu", nu}};
    k.eval = f;
    const double mu = nu / 2.0;
    k.envelope = [f, nu, mu, time_scale_power_lam](double t) {
        if (nu == 1.0) {
            Envelope e;
            e.kind = Envelope::Kind::OscillatoryUnit;
            e.start = 0;
            e.waves = {{1.0 / std::sqrt(2.0 * kPi * t * time_scale_power_lam), 0.0, -kPi / 4}};
            return e;
        }
        // time_scale_power_lam rescales t (u at time lam^{1/nu} t)
        const double tt = t * time_scale_power_lam;
        const double q = 1.0 / (1.0 - mu);
        const double tau = std::pow(tt, nu / 2.0);
        const double c = mwright_decay(mu) * std::pow(kSqrt2 / tau, q);
        auto e = stretched_envelope([&](double x) { return f(x, t); }, c * std::cos(q * kPi / 4.0), q);
        const double w = q * c * std::sin(q * kPi / 4.0);
        e.wavenumber = [w, q](double x) { return w * std::pow(x, q - 1.0); };
        return e;
    };
    return k;
}

}  // namespace

SignedKernel u2nu_kernel(FracOrder o) {
    o = FracOrder::make(o.nu);
    return make_frac_kernel("frac-series", o.nu, 1.0, [o](double x, double t) { return u2nu_eval(x, t, o); });
}

SignedKernel u2nu_series_kernel(FracOrder o) {
    o = FracOrder::make(o.nu);
    return make_frac_kernel("frac-series-only", o.nu, 1.0, [o](double x, double t) { return u2nu_series(x, t, o); });
}

SignedKernel bernstein_kernel() {
    return make_frac_kernel("bernstein", 0.5, 1.0, [](double x, double t) {
        const double z = std::abs(x) / std::pow(t, 0.25);
        return z <= 8.0 ? bernstein_series(x, t) : bernstein_integral(x, t);
    });
}

SignedKernel fourthirds_kernel() {
    return make_frac_kernel("frac-airy", 2.0 / 3.0, 1.0, [](double x, double t) { return u_fourthirds_airy(x, t); });
}

SignedKernel fracdiff_kernel(FracOrder o, Diffusivity d) {
    o = FracOrder::make(o.nu);
    SignedKernel k;
    k.identity = "fracdiff-wright";
    k.params = {{"nu", o.nu}, {"lam", d.lam}};
    k.eval = [o, d](double x, double t) { return fracdiff_wright(x, t, o, d); };
    k.envelope = [o, d, f = k.eval](double t) {
        const double mu = o.nu / 2.0;
        const double q = 1.0 / (1.0 - mu);
        const double a = mwright_decay(mu) * std::pow(1.0 / (d.lam * std::pow(t, o.nu / 2.0)), q);
        auto e = stretched_envelope([&](double x) { return f(x, t); }, a, q);
        e.wavenumber = [](double) { return 0.0; };
        return e;
    };
    return k;
}

SignedKernel subordinate_kernel(FracOrder o, Diffusivity d) {
    if (!(o.nu == 0.5 || std::abs(o.nu - 1.0 / 3.0) < 1e-14))
        throw UnsupportedOrder("subordinate_kernel: nu must be 1/3 or 1/2");
    auto k = make_frac_kernel("subordinate", o.nu, std::pow(d.lam, 1.0 / o.nu),
                              [o, d](double x, double t) { return u_subordinate(x, t, o, d); });
    k.params["lam"] = d.lam;
    return k;
}

}  // namespace fresnelkit
