#include "fresnelkit/rod.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"
#include "fresnelkit/quad.hpp"

namespace fresnelkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_time(double t) {
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("time must be positive and finite");
}

double amp0(double t) { return 1.0 / std::sqrt(2.0 * kPi * t); }

}  // namespace

BoundarySpec BoundarySpec::absorbing(double y) { return {Boundary::Absorbing, 0.0, y, std::nullopt}; }
BoundarySpec BoundarySpec::reflecting(double y) { return {Boundary::Reflecting, 0.0, y, std::nullopt}; }
BoundarySpec BoundarySpec::elastic(double alpha, double y) {
    if (!(alpha >= 0) || !std::isfinite(alpha)) throw DomainError("elastic: alpha must be finite and >= 0");
    if (alpha == 0.0) return reflecting(y);
    return {Boundary::Elastic, alpha, y, std::nullopt};
}
BoundarySpec BoundarySpec::finite_reflecting(double y, double L) {
    if (!(L > 0)) throw DomainError("finite rod: L must be positive");
    return {Boundary::Reflecting, 0.0, y, L};
}

const char* boundary_name(Boundary b) {
    switch (b) {
        case Boundary::Absorbing: return "absorbing";
        case Boundary::Reflecting: return "reflecting";
        default: return "elastic";
    }
}

double fresnel_kernel(double x, double t) {
    check_time(t);
    return std::cos(x * x / (2.0 * t) - kQuarterPi) * amp0(t);
}

double fresnel_kernel_drift(double x, double t, DriftSpec d) {
    check_time(t);
    const double m = d.mu_drift;
    return std::exp(m * x) * amp0(t) * std::cos(x * x / (2.0 * t) - m * m * t / 2.0 - kQuarterPi);
}

double elastic_form2(double x, double t, double alpha, double y) {
    check_time(t);
    const double s = x + y;
    const auto r = integrate_oscillatory(
        Amplitude::exponential([alpha, s](double w) { return std::exp(-alpha * (w - s)); }, alpha), t, s, kInf,
        1e-13);
    return fresnel_kernel(x - y, t) + fresnel_kernel(s, t) - 2.0 * alpha * r.value * amp0(t);
}

double elastic_form1(double x, double t, double alpha, double y) {
    check_time(t);
    const double s = x + y;
    // v = w^2/2t turns the quadratic phase into a linear one
    const double v0 = s * s / (2.0 * t);
    auto g = [=](double v) { return std::exp(-alpha * (std::sqrt(2.0 * t * v) - s)) * std::cos(v - 3.0 * kQuarterPi); };
    long k0 = static_cast<long>(std::ceil((v0 - 5.0 * kQuarterPi) / kPi));
    while (5.0 * kQuarterPi + k0 * kPi <= v0) ++k0;
    const auto r = sum_panels(g, v0, [k0](int k) { return 5.0 * kQuarterPi + (k0 + k - 1) * kPi; }, 1e-13);
    return fresnel_kernel(x - y, t) - fresnel_kernel(s, t) + 2.0 * t * r.value / std::sqrt(2.0 * kPi * t * t * t);
}

double halfline_solution(double x, double t, const BoundarySpec& b) {
    check_time(t);
    if (b.L) throw DomainError("halfline_solution: finite geometry given");
    if (!(x >= 0)) throw DomainError("halfline_solution: x must be >= 0");
    if (!(b.y > 0)) throw DomainError("halfline_solution: y must be > 0");
    switch (b.kind) {
        case Boundary::Absorbing: {
            if (x == 0.0) return 0.0;
            return fresnel_kernel(x - b.y, t) - fresnel_kernel(x + b.y, t);
        }
        case Boundary::Reflecting: return fresnel_kernel(x - b.y, t) + fresnel_kernel(x + b.y, t);
        case Boundary::Elastic: {
            const double u2 = elastic_form2(x, t, b.alpha, b.y);
            const double u1 = elastic_form1(x, t, b.alpha, b.y);
            if (std::abs(u1 - u2) > 1e-9 * std::max(1.0, std::abs(u2)))
                throw NonConvergence("elastic representations disagree by " + std::to_string(std::abs(u1 - u2)));
            return u2;
        }
    }
    return 0.0;
}

double finite_rod_image_sum(double x, double t, double y, double L, int K) {
    check_time(t);
    const double dm = x - y, dp = x + y;
    double s = fresnel_kernel(dm, t) + fresnel_kernel(dp, t);
    for (int k = 1; k <= K; ++k) {
        const double sh = 2.0 * k * L;
        s += (fresnel_kernel(dm + sh, t) + fresnel_kernel(dm - sh, t)) +
             (fresnel_kernel(dp + sh, t) + fresnel_kernel(dp - sh, t));
    }
    return s;
}

FiniteRodValue finite_rod_solution(double x, double t, const BoundarySpec& b, int K) {
    if (!b.L) throw DomainError("finite_rod_solution: no rod length");
    const double L = *b.L;
    if (K < 0) throw DomainError("finite_rod_solution: K must be >= 0");
    if (!(x >= 0 && x <= L && b.y >= 0 && b.y <= L)) throw DomainError("finite_rod_solution: need 0 <= x, y <= L");
    const double v = finite_rod_image_sum(x, t, b.y, L, K);
    if (K == 0) return {v, false, std::abs(v)};
    const double prev = finite_rod_image_sum(x, t, b.y, L, K - 1);
    const double inc = std::abs(v - prev);
    return {v, inc <= 1e-8, inc};
}

double survival_measure(double y, double t, const BoundarySpec& b) {
    check_time(t);
    if (b.L) throw DomainError("survival_measure: half-line geometry only");
    if (!(y > 0)) throw DomainError("survival_measure: y must be > 0");
    switch (b.kind) {
        case Boundary::Reflecting: return 1.0;
        case Boundary::Absorbing: return fresnel_wave_integral(t, -y, y) * amp0(t);
        case Boundary::Elastic: break;
    }
    // x-integral of the elastic solution. The u(x - y) image integrates in closed form; the rest
    // carries the (x + y)^2/2t phase and is summed over its half-periods.
    const double alpha = b.alpha;
    const double direct = fresnel_wave_integral(t, -y, kInf) * amp0(t);
    auto g = [&](double x) { return elastic_form2(x, t, alpha, y) - fresnel_kernel(x - y, t); };
    // zeros of cos((x + y)^2/2t - pi/4) beyond x = 0
    auto zero = [&](long k) { return std::sqrt(2.0 * t * (3.0 * kQuarterPi + k * kPi)) - y; };
    long k0 = 0;
    while (zero(k0) <= 0) ++k0;
    const auto r = sum_panels(g, 0.0, [&](int k) { return zero(k0 + k - 1); }, 1e-11);
    return direct + r.value;
}

double elastic_survival_closed(double y, double t, double alpha) {
    check_time(t);
    const auto r = integrate_oscillatory(
        Amplitude::exponential([alpha, y](double w) { return std::exp(-alpha * (w - y)); }, alpha), t, y, kInf,
        1e-13);
    return (fresnel_wave_integral(t, -y, y) + 2.0 * r.value) * amp0(t);
}

double fresnel_root(int k, double t) {
    check_time(t);
    if (k < 0) throw DomainError("fresnel_root: k must be >= 0");
    return std::sqrt(2.0 * t * (3.0 * kQuarterPi + k * kPi));
}

double printed_root_point(int k, double t) {
    check_time(t);
    return std::sqrt(2.0 * kPi * (1.5 + k)) * std::sqrt(t);
}

SignedKernel free_kernel() {
    SignedKernel k;
    k.identity = "fresnel";
    k.eval = [](double x, double t) { return fresnel_kernel(x, t); };
    k.envelope = [](double t) {
        Envelope e;
        e.kind = Envelope::Kind::OscillatoryUnit;
        e.start = 0;
        e.waves = {{amp0(t), 0.0, -kQuarterPi}};
        return e;
    };
    return k;
}

SignedKernel drift_kernel(DriftSpec d) {
    SignedKernel k;
    k.identity = "fresnel-drift";
    k.params = {{"mu_drift", d.mu_drift}};
    k.even = d.mu_drift == 0.0;
    k.eval = [d](double x, double t) { return fresnel_kernel_drift(x, t, d); };
    k.envelope = [d](double t) {
        Envelope e;
        e.kind = Envelope::Kind::Exponential;
        e.start = 0;
        e.scale = amp0(t);
        e.rate = -std::abs(d.mu_drift);
        return e;
    };
    return k;
}

SignedKernel halfline_kernel(const BoundarySpec& b) {
    if (b.L) throw DomainError("halfline_kernel: finite geometry given");
    if (!(b.y > 0)) throw DomainError("halfline_kernel: y must be > 0");
    SignedKernel k;
    k.identity = std::string("halfline-") + boundary_name(b.kind);
    k.params = {{"y", b.y}, {"alpha", b.alpha}};
    k.even = false;
    k.x_min = 0.0;
    k.eval = [b](double x, double t) { return halfline_solution(x, t, b); };
    k.envelope = [b](double t) {
        Envelope e;
        const double a = amp0(t);
        if (b.kind == Boundary::Elastic) {
            // images plus a correction bounded by 2 sup|u|
            e.kind = Envelope::Kind::PowerLaw;
            e.start = 1.0;
            e.scale = 4.0 * a;
            e.rate = 0.0;
            return e;
        }
        e.kind = Envelope::Kind::OscillatoryUnit;
        e.start = 0;
        const double sg = b.kind == Boundary::Absorbing ? -1.0 : 1.0;
        e.waves = {{a, -b.y, -kQuarterPi}, {sg * a, b.y, -kQuarterPi}};
        return e;
    };
    return k;
}

SignedKernel finite_rod_kernel(const BoundarySpec& b, int K) {
    if (!b.L) throw DomainError("finite_rod_kernel: no rod length");
    SignedKernel k;
    k.identity = "finite-rod";
    k.params = {{"y", b.y}, {"L", *b.L}, {"K", double(K)}};
    k.even = false;
    k.x_min = 0.0;
    k.x_max = *b.L;
    k.eval = [b, K](double x, double t) { return finite_rod_solution(x, t, b, K).value; };
    return k;
}

double fresnel_time_average(double x, const std::function<double(double)>& rho, double s_max, double tol) {
    const double ax = std::abs(x);
    detail::GKOptions opt;
    opt.abs_tol = tol * 0.25;
    opt.max_segments = 20000;
    double total = 0.0;

    // s = w^2 on the smooth part, which also absorbs an s^{-1/2} factor at the origin
    auto smooth_part = [&](double s_lo, double s_hi) {
        if (!(s_hi > s_lo)) return 0.0;
        auto f = [&](double w) {
            const double s = w * w;
            return fresnel_kernel(ax, s) * rho(s) * 2.0 * w;
        };
        return detail::gk_adaptive<double>(f, detail::linspace_pts(std::sqrt(s_lo), std::sqrt(s_hi), 16), opt).value;
    };

    double s_c = 0.0;
    if (ax > 0) {
        // s < s_c: v = x^2/(2s) >= V, phase v - pi/4 linear in v
        const double V = 15.0 * kQuarterPi;
        s_c = ax * ax / (2.0 * V);
        auto g = [&](double v) {
            const double s = ax * ax / (2.0 * v);
            return std::cos(v - kQuarterPi) * rho(s) * ax / (2.0 * kSqrtPi * v * std::sqrt(v));
        };
        const auto r = sum_panels(g, V, [V](int k) { return V + k * kPi; }, tol * 0.25);
        total += r.value;
    }
    if (std::isfinite(s_max)) {
        total += smooth_part(s_c, s_max);
    } else {
        const double S1 = std::max(1.0, 8.0 * s_c);
        total += smooth_part(s_c, S1);
        // s = 1/p^2 on [S1, inf)
        auto f = [&](double p) {
            if (p == 0.0) return 0.0;
            const double s = 1.0 / (p * p);
            return fresnel_kernel(ax, s) * rho(s) * 2.0 / (p * p * p);
        };
        total += detail::gk_adaptive<double>(f, detail::linspace_pts(0.0, 1.0 / std::sqrt(S1), 8), opt).value;
    }
    return total;
}

}  // namespace fresnelkit
