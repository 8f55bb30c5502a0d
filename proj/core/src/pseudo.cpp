#include "fresnelkit/pseudo.hpp"

#include <algorithm>
#include <cmath>

#include "fresnelkit/errors.hpp"
#include "fresnelkit/gk.hpp"
#include "fresnelkit/quad.hpp"
#include "fresnelkit/rod.hpp"

namespace fresnelkit {

namespace {

void check_times(const std::vector<double>& ts) {
    if (ts.empty()) throw DomainError("need at least one time");
    double prev = 0;
    for (double t : ts) {
        if (!(t > prev) || !std::isfinite(t)) throw DomainError("times must be finite and strictly increasing from 0");
        prev = t;
    }
}

bool full_line(const Interval& iv) { return std::isinf(iv.a) && iv.a < 0 && std::isinf(iv.b) && iv.b > 0; }

// int_a^b K(y - x) dy for K(y) = exp(i(y^2/2dt - pi/4)) / sqrt(2 pi dt)
cplx propagator_integral(double dt, double x, double a, double b) {
    const double re = fresnel_wave_integral(dt, a - x, b - x, -kQuarterPi);
    const double im = fresnel_wave_integral(dt, a - x, b - x, -3 * kQuarterPi);
    return cplx(re, im) / std::sqrt(2 * kPi * dt);
}

cplx propagator(double dt, double y) {
    return std::polar(1.0 / std::sqrt(2 * kPi * dt), y * y / (2 * dt) - kQuarterPi);
}

struct Level {
    double dt;
    Interval iv;
    std::function<double(double)> weight;  // empty: 1
    double const_weight = 1;               // used when weight is empty
    std::vector<double> breaks;            // points where the weight is not smooth
};

// phi_j(x) = int K_j(y - x) w_j(y) phi_{j+1}(y) dy, phi_n = 1.
// Numeric levels use fixed composite 21-point Kronrod nodes sized to the local oscillation, so each
// level is one dense matrix-vector product against the level below.
class IteratedMeasure {
public:
    IteratedMeasure(std::vector<Level> levels, double x0, int refine = 1)
        : lv_(std::move(levels)), x0_(x0), refine_(refine) {
        const int n = static_cast<int>(lv_.size());
        collapse_ = n;
        while (collapse_ > 0 && full_line(lv_[collapse_ - 1].iv) && !lv_[collapse_ - 1].weight) --collapse_;
        for (int j = 0; j < collapse_; ++j) {
            const auto& iv = lv_[j].iv;
            const bool closed = j == collapse_ - 1 && !lv_[j].weight;
            if (!closed && (!std::isfinite(iv.a) || !std::isfinite(iv.b)))
                throw DomainError("unbounded coordinate needs full-line inner coordinates");
        }
        tail_ = 1;
        for (int m = collapse_; m < n; ++m) tail_ *= lv_[m].const_weight;
    }

    cplx value() const { return phi_at(0, {x0_})[0]; }

private:
    Interval outer(int j) const { return j == 0 ? Interval{x0_, x0_} : lv_[j - 1].iv; }

    static double reach(const Interval& from, const Interval& to) {
        return std::max(std::abs(to.b - from.a), std::abs(to.a - from.b));
    }

    std::vector<cplx> phi_at(int j, const std::vector<double>& xs) const {
        if (j >= collapse_) return std::vector<cplx>(xs.size(), tail_);
        const Level& L = lv_[j];
        std::vector<cplx> out(xs.size(), 0.0);
        if (!(L.iv.b > L.iv.a)) return out;
        if (j == collapse_ - 1 && !L.weight) {
            for (size_t i = 0; i < xs.size(); ++i)
                out[i] = L.const_weight * tail_ * propagator_integral(L.dt, xs[i], L.iv.a, L.iv.b);
            return out;
        }
        double freq = reach(outer(j), L.iv) / L.dt;
        if (j + 1 < collapse_) freq += reach(L.iv, lv_[j + 1].iv) / lv_[j + 1].dt;
        // weight kinks become panel edges
        std::vector<double> edges{L.iv.a};
        for (double b : L.breaks)
            if (b > L.iv.a && b < L.iv.b) edges.push_back(b);
        edges.push_back(L.iv.b);
        std::vector<double> ys, ws;
        long total = 0;
        for (size_t e = 0; e + 1 < edges.size(); ++e) {
            const double lo = edges[e], span = edges[e + 1] - lo;
            const long panels = refine_ * (static_cast<long>(std::ceil(span * freq / kPi)) + 1);
            total += panels;
            if (total > 200000) throw BudgetExceeded("cylinder quadrature: too many oscillation panels");
            const double h = span / panels;
            for (long p = 0; p < panels; ++p) {
                const double c = lo + (p + 0.5) * h, r = 0.5 * h;
                for (int k = 0; k < 21; ++k) {
                    const int idx = k < 11 ? k : 20 - k;
                    const double sg = k < 10 ? -1.0 : 1.0;
                    ys.push_back(c + sg * r * detail::kXgk[idx]);
                    ws.push_back(r * detail::kWgk[idx]);
                }
            }
        }
        const auto inner = phi_at(j + 1, ys);
        std::vector<cplx> g(ys.size());
        for (size_t k = 0; k < ys.size(); ++k)
            g[k] = inner[k] * ws[k] * (L.weight ? L.weight(ys[k]) : L.const_weight);
        for (size_t i = 0; i < xs.size(); ++i) {
            cplx acc = 0.0;
            for (size_t k = 0; k < ys.size(); ++k) acc += propagator(L.dt, ys[k] - xs[i]) * g[k];
            out[i] = acc;
        }
        return out;
    }

    std::vector<Level> lv_;
    double x0_;
    int refine_;
    int collapse_;
    cplx tail_;
};

// doubles the node density until two passes agree to tol
double refined_value(const std::vector<Level>& lv, double x0, double tol) {
    double prev = IteratedMeasure(lv, x0, 1).value().real();
    for (int r = 2; r <= 16; r *= 2) {
        const double cur = IteratedMeasure(lv, x0, r).value().real();
        if (std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    throw NonConvergence("iterated quadrature did not settle under node refinement");
}

double deriv(const std::function<double(double)>& f, double x, int order) {
    StencilSpec s;
    s.order = order;
    s.points = order <= 2 ? 7 : 9;
    s.step = (order <= 2 ? 1e-2 : 2e-2) * std::max(1.0, std::abs(x));
    return finite_diff(f, x, s);
}

}  // namespace

PathGrid PathGrid::make(std::vector<double> times, std::vector<double> coords) {
    check_times(times);
    if (times.size() != coords.size()) throw DomainError("PathGrid: times and coords differ in length");
    return PathGrid{std::move(times), std::move(coords)};
}

CylinderSet CylinderSet::make(std::vector<double> times, std::vector<Interval> intervals) {
    check_times(times);
    if (times.size() != intervals.size()) throw DomainError("CylinderSet: times and intervals differ in length");
    for (const auto& iv : intervals)
        if (std::isnan(iv.a) || std::isnan(iv.b) || iv.a > iv.b) throw DomainError("CylinderSet: need a <= b");
    return CylinderSet{std::move(times), std::move(intervals)};
}

Potential Potential::constant(double c) {
    if (!(c >= 0) || !std::isfinite(c)) throw DomainError("potential must be non-negative");
    Potential p;
    p.kind = Kind::Constant;
    p.c = c;
    p.k = [c](double) { return c; };
    return p;
}

Potential Potential::tabulated(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 2 || grid.size() != values.size()) throw DomainError("tabulated potential needs matching grids");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw DomainError("tabulated potential grid must increase");
    for (double v : values)
        if (!(v >= 0)) throw DomainError("potential must be non-negative");
    Potential p;
    p.kind = Kind::Tabulated;
    p.grid = grid;
    p.values = values;
    p.k = [g = std::move(grid), v = std::move(values)](double x) {
        if (x <= g.front()) return v.front();
        if (x >= g.back()) return v.back();
        const auto it = std::upper_bound(g.begin(), g.end(), x);
        const size_t i = static_cast<size_t>(it - g.begin());
        const double s = (x - g[i - 1]) / (g[i] - g[i - 1]);
        return v[i - 1] + s * (v[i] - v[i - 1]);
    };
    return p;
}

double npoint_density(const PathGrid& g) {
    if (g.times.empty() || g.times.size() != g.coords.size()) throw DomainError("npoint_density: malformed grid");
    double tp = 0, xp = 0, phase = 0, norm = 1;
    for (int j = 0; j < g.size(); ++j) {
        const double dt = g.times[j] - tp, dx = g.coords[j] - xp;
        if (!(dt > 0)) throw DomainError("npoint_density: times must increase");
        phase += dx * dx / (2 * dt);
        norm *= 2 * kPi * dt;
        tp = g.times[j];
        xp = g.coords[j];
    }
    return std::cos(phase - g.size() * kQuarterPi) / std::sqrt(norm);
}

double marginalize_last(const PathGrid& g, double tol) {
    const int n = g.size();
    if (n < 2) throw DomainError("marginalize_last: need n >= 2");
    double tp = 0, xp = 0, phase = 0, norm = 1;
    for (int j = 0; j + 1 < n; ++j) {
        const double dt = g.times[j] - tp, dx = g.coords[j] - xp;
        phase += dx * dx / (2 * dt);
        norm *= 2 * kPi * dt;
        tp = g.times[j];
        xp = g.coords[j];
    }
    const double dt = g.times[n - 1] - tp;
    norm *= 2 * kPi * dt;
    // in w = x_n - x_{n-1}: cos(w^2/2dt + phase - n pi/4)
    const auto r = integrate_oscillatory(Amplitude::unit(), dt, -INFINITY, INFINITY, tol, phase - n * kQuarterPi);
    return r.value / std::sqrt(norm);
}

double cylinder_measure(const CylinderSet& c, double tol) {
    if (c.size() > 4) throw DimensionGuard("cylinder_measure: n <= 4");
    if (c.times.empty() || c.times.size() != c.intervals.size()) throw DomainError("cylinder_measure: malformed set");
    std::vector<Level> lv;
    double tp = 0;
    for (int j = 0; j < c.size(); ++j) {
        lv.push_back({c.times[j] - tp, c.intervals[j], {}, 1.0, {}});
        tp = c.times[j];
    }
    return refined_value(lv, 0.0, tol);
}

MarkovGap markov_gap(double t1, double t2, double t3, double x1, double x2, double x3) {
    check_times({t1, t2, t3});
    if (std::abs(std::cos(x2 * x2 / (2 * t2) - kQuarterPi)) < 1e-6)
        throw PoleError("markov_gap: the t2 marginal vanishes at x2");
    const double p1 = fresnel_kernel(x2, t2);
    const double p3 = npoint_density(PathGrid::make({t1, t2, t3}, {x1, x2, x3}));
    const double p12 = npoint_density(PathGrid::make({t1, t2}, {x1, x2}));
    const double p23 = npoint_density(PathGrid::make({t2, t3}, {x2, x3}));
    const double rhs = (p12 / p1) * (p23 / p1);
    return {p3 / p1, rhs, 2 * kPi * rhs};
}

Superposition superposition_expand(int n) {
    if (n < 1) throw DomainError("superposition_expand: n >= 1");
    Superposition s;
    const double scale = std::ldexp(1.0, -(n - 1));
    double binom = 1;  // C(n, k)
    for (int k = 0; 2 * k < n; ++k) {
        s.components.emplace_back(binom * scale, n - 2 * k);
        binom = binom * (n - k) / (k + 1);
    }
    s.delta_weight = (n % 2 == 0) ? binom * std::ldexp(1.0, -n) : 0.0;
    return s;
}

double superposition_eval(const Superposition& s, double beta, double t) {
    double v = s.delta_weight;
    for (const auto& [w, m] : s.components) v += w * std::cos(m * beta * beta * t / 2);
    return v;
}

SelfConvolution self_convolution(double x, double t) {
    if (!(t > 0)) throw DomainError("self_convolution: t must be positive");
    return {0.5 * std::cos(x * x / (4 * t) - kQuarterPi) / std::sqrt(4 * kPi * t), 0.5};
}

WindowedConvolution self_convolution_numeric(double x, double t, double window, double tol) {
    if (!(t > 0)) throw DomainError("self_convolution_numeric: t must be positive");
    if (x == 0.0) throw DomainError("self_convolution_numeric: the delta part sits at x = 0");
    if (!(window > 0)) throw DomainError("self_convolution_numeric: window must be positive");
    const double step = kPi * t / std::abs(x);
    const double W = std::ceil(window / step) * step;
    auto f = [&](double y) { return fresnel_kernel(y, t) * fresnel_kernel(x - y, t); };
    const double span = 2 * W;
    const double freq = (W + std::abs(x)) / t;
    const int n = std::clamp(static_cast<int>(std::ceil(span * freq / kPi)) + 4, 4, 20000);
    detail::GKOptions opt;
    opt.abs_tol = tol;
    opt.max_segments = std::max(5000, 4 * n);
    double v = detail::gk_adaptive<double>(f, detail::linspace_pts(-W, W, n), opt).value;
    // chirp part cos((y - x/2)^2/t + x^2/4t - pi/2) / (4 pi t) outside the window
    const double ph = x * x / (4 * t) - 2 * kQuarterPi;
    v += (fresnel_wave_integral(t / 2, W - x / 2, INFINITY, ph) + fresnel_wave_integral(t / 2, -INFINITY, -W - x / 2, ph)) /
         (4 * kPi * t);
    return {v, W};
}

double feynman_kac_trotter(const Potential& p, double x, double t, int n, double box, double tol) {
    if (n < 1 || n > 3) throw DimensionGuard("feynman_kac_trotter: n in [1, 3]");
    if (!(t > 0)) throw DomainError("feynman_kac_trotter: t must be positive");
    if (!(box > 0)) throw DomainError("feynman_kac_trotter: box must be positive");
    for (int i = 0; i <= 200; ++i)
        if (!(p(x - box + 2 * box * i / 200.0) >= 0)) throw DomainError("potential negative on the evaluation grid");
    const double dt = t / n;
    std::vector<Level> lv;
    for (int j = 0; j < n; ++j) {
        Level L{dt, {x - box, x + box}, {}, 1.0, {}};
        if (p.kind == Potential::Kind::Constant) {
            L.const_weight = std::exp(-p.c * dt);
        } else {
            L.weight = [&p, dt](double y) { return std::exp(-p(y) * dt); };
            L.breaks = p.grid;
        }
        lv.push_back(std::move(L));
    }
    return refined_value(lv, x, tol);
}

double feynman_kac_halfsum(double c, double /*x*/, double t) {
    if (!(c >= 0)) throw DomainError("feynman_kac_halfsum: c must be non-negative");
    return std::cos(c * t);
}

FKResidual feynman_kac_pde_residual(const Potential& p, const std::function<double(double, double)>& w, double x,
                                    double t) {
    auto wx = [&](double y) { return w(y, t); };
    auto kw = [&](double y) { return p(y) * w(y, t); };
    StencilSpec st;
    st.order = 2;
    st.points = 5;
    st.step = 1e-3 * std::max(1.0, t);
    const double wtt = finite_diff([&](double s) { return w(x, s); }, t, st);
    const double w4 = deriv(wx, x, 4), w2 = deriv(wx, x, 2), kw2 = deriv(kw, x, 2);
    const double k = p(x), wv = w(x, t);
    const double printed = wtt + 0.5 * (w4 - kw2 - k * w2 - k * k * wv);
    const double corrected = wtt - (-0.25 * w4 + 0.5 * kw2 + 0.5 * k * w2 - k * k * wv);
    return {printed, corrected};
}

}  // namespace fresnelkit
