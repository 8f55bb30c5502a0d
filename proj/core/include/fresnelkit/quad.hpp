#pragma once
#include <complex>
#include <functional>
#include <vector>

#include "fresnelkit/kernel.hpp"
#include "fresnelkit/specfun.hpp"

namespace fresnelkit {

struct QuadResult {
    double value = 0;
    double err_estimate = 0;
    long evaluations = 0;
};

struct QuadResultC {
    cplx value = 0;
    double err_estimate = 0;
    long evaluations = 0;
};

using RealFn = std::function<double(double)>;

QuadResult integrate_adaptive(const RealFn& f, double a, double b, double tol, int max_depth = 50);

// Amplitude multiplying cos(w^2/2t + phase). Only Unit and decaying amplitudes may run to infinity.
struct Amplitude {
    enum class Kind { Unit, Exponential, PowerLaw, Bounded };
    Kind kind = Kind::Unit;
    RealFn f;           // ignored for Unit
    double decay = 0;   // rate (Exponential) or exponent (PowerLaw)

    static Amplitude unit() { return {}; }
    static Amplitude exponential(RealFn g, double rate) { return {Kind::Exponential, std::move(g), rate}; }
    static Amplitude power_law(RealFn g, double p) { return {Kind::PowerLaw, std::move(g), p}; }
    static Amplitude bounded(RealFn g) { return {Kind::Bounded, std::move(g), 0}; }
    double operator()(double w) const { return kind == Kind::Unit ? 1.0 : f(w); }
};

inline constexpr double kQuarterPi = 0.785398163397448309615660845819875721;

// int_a^b amp(w) cos(w^2/(2t) + phase) dw, a and b may be infinite.
QuadResult integrate_oscillatory(const Amplitude& amp, double t, double a, double b, double tol,
                                 double phase = -kQuarterPi);

// Closed form of int_a^b cos(w^2/(2t) + phase) dw (a, b may be infinite).
double fresnel_wave_integral(double t, double a, double b, double phase = -kQuarterPi);
// Closed form of int_a^b cos((w + d)^2/(2t) + phase) dw.
double shifted_wave_integral(double t, double d, double a, double b, double phase);

// sum of the alternating panel series by Wynn's epsilon algorithm; returns estimate and error
struct Extrapolated {
    double value;
    double err;
};
Extrapolated wynn_epsilon(const std::vector<double>& partial_sums);

// sum of int_{p_k}^{p_{k+1}} g over breakpoints p_0 = start, p_k = breakpoint(k), k >= 1, until the
// running sum settles directly or under Wynn extrapolation
QuadResult sum_panels(const RealFn& g, double start, const std::function<double(int)>& breakpoint, double tol,
                      int max_panels = 20000);

// int_{-inf}^{inf} e^{i beta x} K(x,t) dx
cplx fourier_numeric(const SignedKernel& kernel, double beta, double t, double tol);

// int_0^inf e^{-mu t} f(t) dt; horizon <= 0 selects 40/mu
QuadResult laplace_numeric(const RealFn& f, double mu, double tol, double horizon = 0.0);

struct StencilSpec {
    int order = 1;
    double step = 0;   // 0 selects eps^{1/(order+2)} max(1,|x0|)
    int points = 0;    // 0 selects the default width (3, 5, 5, 7)
    // Offsets in units of step. Empty means the central stencil of the given width.
    std::vector<double> offsets;
};

// Fornberg weights for the m-th derivative at 0 from nodes z
std::vector<double> fornberg_weights(const std::vector<double>& z, int m);

double finite_diff(const RealFn& f, double x0, const StencilSpec& spec);

double default_step(int order, double x0);

}  // namespace fresnelkit
