#include "fresnelkit/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"

namespace fresnelkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(double v) { return std::isfinite(v); }

}  // namespace

const char* envelope_name(Envelope::Kind k) {
    switch (k) {
        case Envelope::Kind::OscillatoryUnit: return "oscillatory-unit";
        case Envelope::Kind::Exponential: return "exponential";
        case Envelope::Kind::PowerLaw: return "power-law";
        default: return "none";
    }
}

QuadResult integrate_adaptive(const RealFn& f, double a, double b, double tol, int max_depth) {
    if (!finite(a) || !finite(b)) throw DomainError("integrate_adaptive: endpoints must be finite");
    if (a == b) return {0.0, 0.0, 1};
    if (a > b) {
        auto r = integrate_adaptive(f, b, a, tol, max_depth);
        r.value = -r.value;
        return r;
    }
    detail::GKOptions opt;
    opt.abs_tol = tol;
    opt.max_depth = max_depth;
    const auto r = detail::gk_adaptive<double>(f, a, b, opt);
    return {r.value, r.err, r.evals};
}

double fresnel_wave_integral(double t, double a, double b, double phase) {
    if (!(t > 0)) throw DomainError("fresnel_wave_integral: t must be positive");
    if (a == b) return 0.0;
    const double s = std::sqrt(2.0 * t);
    const auto fa = fresnel_cs(a / s), fb = fresnel_cs(b / s);
    return s * (std::cos(phase) * (fb.C - fa.C) - std::sin(phase) * (fb.S - fa.S));
}

double shifted_wave_integral(double t, double d, double a, double b, double phase) {
    return fresnel_wave_integral(t, a + d, b + d, phase);
}

Extrapolated wynn_epsilon(const std::vector<double>& sums) {
    const int n = static_cast<int>(sums.size());
    if (n == 0) return {0.0, kInf};
    if (n < 3) return {sums.back(), n == 2 ? std::abs(sums[1] - sums[0]) : kInf};
    auto est = [&](int m) {
        const int start = std::max(0, m - 40);
        std::vector<double> cur(sums.begin() + start, sums.begin() + m);
        std::vector<double> prev(cur.size() + 1, 0.0);
        double best = cur.back();
        const int len = static_cast<int>(cur.size());
        for (int k = 1; k < len; ++k) {
            std::vector<double> next(len - k);
            for (int i = 0; i < len - k; ++i) {
                const double diff = cur[i + 1] - cur[i];
                if (diff == 0.0 || !std::isfinite(1.0 / diff)) return best;
                next[i] = prev[i + 1] + 1.0 / diff;
            }
            prev = std::move(cur);
            cur = std::move(next);
            if (k % 2 == 0) {
                if (!std::isfinite(cur.back())) return best;
                best = cur.back();
            }
        }
        return best;
    };
    const double e0 = est(n), e1 = est(n - 1), e2 = est(n - 2);
    return {e0, std::abs(e0 - e1) + std::abs(e0 - e2)};
}

namespace {

// Sums panels [p_k, p_{k+1}] of g until the running sum settles, directly or by Wynn extrapolation.
// next_point(k) gives the k-th breakpoint (k >= 1), p_0 = start.
template <class G, class NP>
QuadResult panel_series(G&& g, double start, NP&& next_point, double tol, int max_panels = 20000) {
    std::vector<double> partial;
    double sum = 0.0, err = 0.0;
    long nev = 0;
    int small = 0;
    double prev_est = kInf, prev_est2 = kInf;
    double a = start;
    detail::GKOptions opt;
    opt.abs_tol = tol * 1e-3;
    opt.throw_on_fail = false;
    for (int k = 1; k <= max_panels; ++k) {
        const double b = next_point(k);
        const auto r = detail::gk_adaptive<double>(g, a, b, opt);
        nev += r.evals;
        sum += r.value;
        err += r.err;
        partial.push_back(sum);
        a = b;
        if (std::abs(r.value) < tol * 1e-2) {
            if (++small >= 3) return {sum, err + std::abs(r.value), nev};
        } else {
            small = 0;
        }
        if (partial.size() >= 8) {
            const auto w = wynn_epsilon(partial);
            if (std::abs(w.value - prev_est) < tol * 0.1 && std::abs(w.value - prev_est2) < tol * 0.1)
                return {w.value, err + std::abs(w.value - prev_est), nev};
            prev_est2 = prev_est;
            prev_est = w.value;
        }
    }
    throw NonConvergence("oscillatory tail did not settle within the panel budget");
}

// int_lo^hi amp(w) cos(w^2/2t + phase) dw with 0 <= lo < hi <= inf
QuadResult osc_positive(const Amplitude& amp, double t, double lo, double hi, double tol, double phase) {
    // phase zeros: w^2/2t + phase = pi/2 + k pi
    auto zero = [&](long k) { return std::sqrt(2.0 * t * (kPi / 2 + k * kPi - phase)); };
    long k0 = static_cast<long>(std::ceil((lo * lo / (2 * t) + phase - kPi / 2) / kPi));
    if (kPi / 2 + k0 * kPi - phase < 0) k0 = static_cast<long>(std::ceil((phase - kPi / 2) / kPi));
    while (zero(k0) <= lo) ++k0;
    auto integrand = [&](double w) { return amp(w) * std::cos(w * w / (2 * t) + phase); };

    if (finite(hi)) {
        std::vector<double> pts{lo};
        for (long k = k0; zero(k) < hi; ++k) {
            pts.push_back(zero(k));
            if (pts.size() > 200000) throw NonConvergence("integrate_oscillatory: too many phase panels");
        }
        pts.push_back(hi);
        detail::GKOptions opt;
        opt.abs_tol = tol * 0.5;
        opt.max_segments = std::max<int>(5000, 4 * static_cast<int>(pts.size()));
        const auto r = detail::gk_adaptive<double>(integrand, pts, opt);
        return {r.value, r.err, r.evals};
    }
    switch (amp.kind) {
        case Amplitude::Kind::Unit: {
            const double w = zero(k0 + 8);
            auto head = osc_positive(amp, t, lo, w, tol * 0.5, phase);
            head.value += fresnel_wave_integral(t, w, kInf, phase);
            return head;
        }
        case Amplitude::Kind::Exponential:
        case Amplitude::Kind::PowerLaw: {
            if (amp.kind == Amplitude::Kind::Exponential && !(amp.decay > 0))
                throw UnsupportedTail("integrate_oscillatory: exponential amplitude needs a positive rate");
            if (amp.kind == Amplitude::Kind::PowerLaw && !(amp.decay > 0))
                throw UnsupportedTail("integrate_oscillatory: power-law amplitude needs a positive exponent");
            auto r = panel_series(integrand, lo, [&](int k) { return zero(k0 + k - 1); }, tol);
            return r;
        }
        default:
            throw UnsupportedTail("integrate_oscillatory: infinite range needs a unit or decaying amplitude");
    }
}

}  // namespace

QuadResult sum_panels(const RealFn& g, double start, const std::function<double(int)>& breakpoint, double tol,
                      int max_panels) {
    return panel_series(g, start, breakpoint, tol, max_panels);
}

QuadResult integrate_oscillatory(const Amplitude& amp, double t, double a, double b, double tol, double phase) {
    if (!(t > 0)) throw DomainError("integrate_oscillatory: phase scale t must be positive");
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate_oscillatory: NaN endpoint");
    if (a == b) return {0.0, 0.0, 1};
    if (a > b) {
        auto r = integrate_oscillatory(amp, t, b, a, tol, phase);
        r.value = -r.value;
        return r;
    }
    QuadResult out{0.0, 0.0, 0};
    if (b > 0) {
        const auto r = osc_positive(amp, t, std::max(a, 0.0), b, tol * 0.5, phase);
        out.value += r.value;
        out.err_estimate += r.err_estimate;
        out.evaluations += r.evaluations;
    }
    if (a < 0) {
        Amplitude mirrored = amp;
        if (amp.kind != Amplitude::Kind::Unit) mirrored.f = [f = amp.f](double w) { return f(-w); };
        const auto r = osc_positive(mirrored, t, std::max(-b, 0.0), -a, tol * 0.5, phase);
        out.value += r.value;
        out.err_estimate += r.err_estimate;
        out.evaluations += r.evaluations;
    }
    out.evaluations = std::max(out.evaluations, 1L);
    return out;
}

namespace {

// int_{X}^{inf} e^{i beta x} w.amp cos((x + d)^2/2t + c) dx, or over (-inf, X] when left.
cplx wave_fourier_tail(const Wave& w, double beta, double t, double X, bool left) {
    const double a = left ? -kInf : X, b = left ? X : kInf;
    const double d = w.shift, c = w.phase;
    const double cp = c - beta * d - beta * beta * t / 2;  // theta + beta x
    const double cm = c + beta * d - beta * beta * t / 2;  // theta - beta x
    const double Ip = shifted_wave_integral(t, d + beta * t, a, b, cp);
    const double Im = shifted_wave_integral(t, d - beta * t, a, b, cm);
    const double Sp = shifted_wave_integral(t, d + beta * t, a, b, cp - kPi / 2);
    const double Sm = shifted_wave_integral(t, d - beta * t, a, b, cm - kPi / 2);
    return w.amp * cplx(0.5 * (Ip + Im), 0.5 * (Sp - Sm));
}

}  // namespace

cplx fourier_numeric(const SignedKernel& kernel, double beta, double t, double tol) {
    if (!(t > 0)) throw DomainError("fourier_numeric: t must be positive");
    const Envelope env = kernel.envelope_at(t);
    const double lo = kernel.x_min, hi = kernel.x_max;
    const bool bounded_domain = finite(lo) && finite(hi);
    if (env.kind == Envelope::Kind::None && !bounded_domain)
        throw EnvelopeMissing("fourier_numeric: kernel '" + kernel.identity + "' declares no envelope");
    const bool fold = kernel.even && !finite(lo) && !finite(hi);

    auto kf = [&](double x) { return kernel.eval(x, t); };
    auto core_integral = [&](double a, double b, double tol_part) -> cplx {
        if (!(b > a)) return 0.0;
        const double xm = std::max(std::abs(a), std::abs(b));
        const double freq = std::abs(beta) + (env.wavenumber ? env.wavenumber(xm) : xm / t);
        const int n = std::clamp(static_cast<int>(std::ceil((b - a) * freq / kPi)) + 4, 4, 4000);
        detail::GKOptions opt;
        opt.abs_tol = tol_part;
        opt.max_segments = 20000;
        if (fold) {
            const auto r = detail::gk_adaptive<double>([&](double x) { return kf(x) * std::cos(beta * x); },
                                                       detail::linspace_pts(a, b, n), opt);
            return r.value;
        }
        const auto r = detail::gk_adaptive<cplx>(
            [&](double x) { return kf(x) * cplx(std::cos(beta * x), std::sin(beta * x)); },
            detail::linspace_pts(a, b, n), opt);
        return r.value;
    };

    if (env.kind == Envelope::Kind::None) return core_integral(lo, hi, tol * 0.5);

    double X0 = std::max(env.start, 0.0);
    if (env.kind == Envelope::Kind::OscillatoryUnit) X0 = std::max(X0, 3.0 * std::sqrt(t));
    if (env.kind == Envelope::Kind::PowerLaw && X0 <= 0) throw EnvelopeMissing("power-law envelope needs start > 0");

    // [lo', hi'] core, then tails beyond +-X0
    const double core_lo = fold ? 0.0 : std::max(lo, -X0);
    const double core_hi = std::min(hi, X0);
    cplx total = core_integral(core_lo, core_hi, tol * 0.25);

    auto tail = [&](bool left) -> cplx {
        const double X = left ? -X0 : X0;
        switch (env.kind) {
            case Envelope::Kind::OscillatoryUnit: {
                cplx s = 0.0;
                for (const auto& w : env.waves) s += wave_fourier_tail(w, beta, t, X, left);
                return s;
            }
            case Envelope::Kind::Exponential: {
                if (!(env.rate > 0)) throw UnsupportedTail("fourier_numeric: growing kernel has no Fourier transform");
                const double ext = std::max(0.0, std::log(std::max(env.scale, 1e-300) / (tol * 1e-3 * env.rate)) / env.rate);
                return left ? core_integral(-X0 - ext, -X0, tol * 0.1) : core_integral(X0, X0 + ext, tol * 0.1);
            }
            case Envelope::Kind::PowerLaw: {
                const double p = env.rate;
                if (beta == 0.0) {
                    if (!(p > 1)) throw UnsupportedTail("fourier_numeric: power-law tail not integrable at beta = 0");
                    // x = X0/u
                    detail::GKOptions opt;
                    opt.abs_tol = tol * 0.1;
                    const double sgn = left ? -1.0 : 1.0;
                    const auto r = detail::gk_adaptive<double>(
                        [&](double u) { return kf(sgn * X0 / u) * X0 / (u * u); }, 0.0, 1.0, opt);
                    return r.value;
                }
                if (!(p > 0)) throw UnsupportedTail("fourier_numeric: bounded non-decaying tail");
                const double step = kPi / std::abs(beta);
                const double sgn = left ? -1.0 : 1.0;
                auto re = panel_series([&](double y) { return kf(sgn * y) * std::cos(beta * y); }, X0,
                                       [&](int k) { return X0 + k * step; }, tol * 0.1);
                if (fold) return re.value;
                auto im = panel_series([&](double y) { return sgn * kf(sgn * y) * std::sin(beta * y); }, X0,
                                       [&](int k) { return X0 + k * step; }, tol * 0.1);
                return cplx(re.value, im.value);
            }
            default: return 0.0;
        }
    };
    if (hi > X0) total += tail(false);
    if (!fold && lo < -X0) total += tail(true);
    if (fold) return 2.0 * total.real();
    return total;
}

QuadResult laplace_numeric(const RealFn& f, double mu, double tol, double horizon) {
    if (!(mu > 0)) throw DomainError("laplace_numeric: mu must be positive");
    const double H = horizon > 0 ? horizon : 40.0 / mu;
    // singularity order: t |f(t)| must vanish at 0
    {
        const double g1 = 1e-10 * std::abs(f(1e-10)), g2 = 1e-13 * std::abs(f(1e-13)), g3 = 1e-16 * std::abs(f(1e-16));
        if (g3 > 1e-6 && g3 >= 0.5 * g2 && g2 >= 0.5 * g1)
            throw DivergenceError("laplace_numeric: singularity of order >= 1 at t = 0");
    }
    const double a = std::min(1.0, H / 4);
    QuadResult out{0.0, 0.0, 0};
    // (0, a] with t = 1/q: integrand decays in q, panels cut at sign changes so oscillation is extrapolated
    auto h = [&](double q) {
        const double tt = 1.0 / q;
        return std::exp(-mu * tt) * f(tt) / (q * q);
    };
    {
        const double q0 = 1.0 / a;
        double q = q0;
        double gap = 2.0;  // last spacing between sign changes
        double hq = h(q);
        auto next = [&](int) {
            // advance to the next sign change, or by a growing stride when none shows up
            const double cap = q + std::max(4.0, 0.5 * q);
            const double q_prev = q;
            double qn = q, hn = hq;
            double dq = std::max(0.25, gap / 8.0);
            while (qn < cap) {
                const double qs = std::min(qn + dq, cap);
                dq *= 1.1;
                const double hs = h(qs);
                if ((hn < 0 && hs > 0) || (hn > 0 && hs < 0)) {
                    double l = qn, r = qs, hl = hn;
                    for (int i = 0; i < 60 && r - l > 1e-13 * r; ++i) {
                        const double m = 0.5 * (l + r), hm = h(m);
                        if ((hl < 0) == (hm < 0)) {
                            l = m;
                            hl = hm;
                        } else {
                            r = m;
                        }
                    }
                    // keep the right end so the next scan starts on the new sign
                    q = r;
                    hq = h(q);
                    gap = q - q_prev;
                    return q;
                }
                qn = qs;
                hn = hs;
            }
            q = cap;
            hq = h(q);
            return q;
        };
        const auto r = panel_series(h, q0, next, tol * 0.5, 200000);
        out.value += r.value;
        out.err_estimate += r.err_estimate;
        out.evaluations += r.evaluations;
    }
    if (H > a) {
        detail::GKOptions opt;
        opt.abs_tol = tol * 0.25;
        opt.max_segments = 20000;
        const auto r = detail::gk_adaptive<double>([&](double tt) { return std::exp(-mu * tt) * f(tt); },
                                                   detail::linspace_pts(a, H, 32), opt);
        out.value += r.value;
        out.err_estimate += r.err;
        out.evaluations += r.evals;
    }
    return out;
}

std::vector<double> fornberg_weights(const std::vector<double>& z, int m) {
    const int n = static_cast<int>(z.size());
    if (m < 0 || n < m + 1) throw DomainError("fornberg_weights: need at least order+1 nodes");
    // c[i][k]: weight of node i for derivative k
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0, c4 = z[0];
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = z[i];
        for (int j = 0; j < i; ++j) {
            const double c3 = z[i] - z[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

double default_step(int order, double x0) {
    return std::pow(kEps, 1.0 / (order + 2)) * std::max(1.0, std::abs(x0));
}

double finite_diff(const RealFn& f, double x0, const StencilSpec& spec) {
    if (spec.order < 1 || spec.order > 8) throw DomainError("finite_diff: derivative order out of range");
    const double h = spec.step > 0 ? spec.step : default_step(spec.order, x0);
    std::vector<double> off = spec.offsets;
    if (off.empty()) {
        static constexpr int kDefault[5] = {0, 3, 5, 5, 7};
        int p = spec.points > 0 ? spec.points : (spec.order <= 4 ? kDefault[spec.order] : spec.order + 3);
        if (p % 2 == 0) ++p;
        for (int i = -(p / 2); i <= p / 2; ++i) off.push_back(i);
    }
    if (static_cast<int>(off.size()) < spec.order + 1) throw DomainError("finite_diff: points < order + 1");
    const auto w = fornberg_weights(off, spec.order);
    double s = 0.0;
    for (size_t i = 0; i < off.size(); ++i)
        if (w[i] != 0.0) s += w[i] * f(x0 + off[i] * h);
    return s / std::pow(h, spec.order);
}

}  // namespace fresnelkit
