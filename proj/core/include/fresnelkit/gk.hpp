#pragma once
// Gauss-Kronrod 10/21 panels with global adaptive bisection. Header-only so that
// the integrand type is inlined; works for double and std::complex<double>.
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "fresnelkit/errors.hpp"

namespace fresnelkit::detail {

inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980178355, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
struct Segment {
    double a, b;
    T val;
    double err;
    double floor;  // roundoff level, splitting below it is pointless
    int depth;
};

template <class T, class F>
Segment<T> gk21(F& f, double a, double b, int depth, long& nev) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fv1[10], fv2[10];
    const T fc = f(c);
    T resk = fc * kWgk[10];
    T resg = T(0);
    double resabs = std::abs(fc) * kWgk[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = h * kXgk[j];
        fv1[j] = f(c - dx);
        fv2[j] = f(c + dx);
        const T s = fv1[j] + fv2[j];
        resk += kWgk[j] * s;
        if (j % 2 == 1) resg += kWg[j / 2] * s;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    nev += 21;
    const T reskh = resk * 0.5;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    const double ah = std::abs(h);
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double fl = 50.0 * eps * resabs;
    err = std::max(err, fl);
    return {a, b, resk * h, err, fl, depth};
}

struct GKOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_depth = 50;
    int max_segments = 5000;
    bool throw_on_fail = true;
};

template <class T>
struct GKOut {
    T value;
    double err;
    long evals;
};

template <class T, class F>
GKOut<T> gk_adaptive(F&& f, const std::vector<double>& pts, const GKOptions& opt = {}) {
    long nev = 0;
    auto cmp = [](const Segment<T>& x, const Segment<T>& y) { return x.err < y.err; };
    std::priority_queue<Segment<T>, std::vector<Segment<T>>, decltype(cmp)> heap(cmp);
    T total = T(0), done_val = T(0);
    double total_err = 0.0, done_err = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i] == pts[i + 1]) continue;
        auto s = gk21<T>(f, pts[i], pts[i + 1], 0, nev);
        total += s.val;
        total_err += s.err;
        if (s.err <= s.floor * 1.0001) {
            done_val += s.val;
            done_err += s.err;
        } else {
            heap.push(s);
        }
    }
    int nseg = static_cast<int>(heap.size());
    int iter = 0;
    while (!heap.empty()) {
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (total_err <= tol) break;
        if (++iter % 64 == 0) {
            // resync running sums
            auto copy = heap;
            T v = done_val;
            double e = done_err;
            while (!copy.empty()) {
                v += copy.top().val;
                e += copy.top().err;
                copy.pop();
            }
            total = v;
            total_err = e;
        }
        Segment<T> s = heap.top();
        if (s.depth >= opt.max_depth || nseg >= opt.max_segments) {
            if (opt.throw_on_fail)
                throw NonConvergence("adaptive quadrature did not converge (err " + std::to_string(total_err) +
                                     ", tol " + std::to_string(tol) + ")");
            break;
        }
        heap.pop();
        const double m = 0.5 * (s.a + s.b);
        auto l = gk21<T>(f, s.a, m, s.depth + 1, nev);
        auto r = gk21<T>(f, m, s.b, s.depth + 1, nev);
        total += l.val + r.val - s.val;
        total_err += l.err + r.err - s.err;
        for (auto* p : {&l, &r}) {
            if (p->err <= p->floor * 1.0001) {
                done_val += p->val;
                done_err += p->err;
            } else {
                heap.push(*p);
            }
        }
        ++nseg;
    }
    T v = done_val;
    double e = done_err;
    while (!heap.empty()) {
        v += heap.top().val;
        e += heap.top().err;
        heap.pop();
    }
    return {v, e, std::max(nev, 1L)};
}

template <class T, class F>
GKOut<T> gk_adaptive(F&& f, double a, double b, const GKOptions& opt = {}) {
    return gk_adaptive<T>(std::forward<F>(f), std::vector<double>{a, b}, opt);
}

// Breakpoints a, a+(b-a)/n, ..., b.
inline std::vector<double> linspace_pts(double a, double b, int n) {
    std::vector<double> p(n + 1);
    for (int i = 0; i <= n; ++i) p[i] = a + (b - a) * i / n;
    p[n] = b;
    return p;
}

}  // namespace fresnelkit::detail
