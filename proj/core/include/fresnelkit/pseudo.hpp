#pragma once
#include <functional>
#include <utility>
#include <vector>

#include "fresnelkit/specfun.hpp"

namespace fresnelkit {

// times t_1 < ... < t_n with positions x_1..x_n; t_0 = 0, x_0 = 0 implicit
struct PathGrid {
    std::vector<double> times;
    std::vector<double> coords;
    static PathGrid make(std::vector<double> times, std::vector<double> coords);
    int size() const { return static_cast<int>(times.size()); }
};

struct Interval {
    double a;
    double b;
};

struct CylinderSet {
    std::vector<double> times;
    std::vector<Interval> intervals;
    static CylinderSet make(std::vector<double> times, std::vector<Interval> intervals);
    int size() const { return static_cast<int>(times.size()); }
};

struct Potential {
    enum class Kind { Constant, Tabulated };
    Kind kind = Kind::Constant;
    double c = 0;
    std::vector<double> grid, values;  // Tabulated: piecewise linear, flat outside the grid
    std::function<double(double)> k;

    static Potential constant(double c);
    static Potential tabulated(std::vector<double> grid, std::vector<double> values);
    double operator()(double x) const { return k(x); }
};

double npoint_density(const PathGrid& g);

// int over x_n of the n-point density by oscillatory quadrature (x_n of g is ignored)
double marginalize_last(const PathGrid& g, double tol = 1e-10);

// Signed measure of the cylinder set. Each coordinate integral is done against the complex
// propagator, the innermost in closed form. Infinite endpoints are accepted on the innermost
// coordinate and on coordinates whose inner coordinates all span the real line.
double cylinder_measure(const CylinderSet& c, double tol = 1e-9);

struct MarkovGap {
    double lhs;          // p3(x1,x2,x3) / p1(x2)
    double rhs;          // [p2(x1,x2)/p1(x2)] [p2'(x2,x3)/p1(x2)]
    double printed_rhs;  // the printed product, 2 pi times rhs
};
// p2' is the two-point density of the pair (x2 at t2, x3 at t3) started from 0
MarkovGap markov_gap(double t1, double t2, double t3, double x1, double x2, double x3);

struct Superposition {
    std::vector<std::pair<double, int>> components;  // (weight, time multiplier)
    double delta_weight;
};
Superposition superposition_expand(int n);
double superposition_eval(const Superposition& s, double beta, double t);

struct SelfConvolution {
    double regular;
    double delta_weight;
};
SelfConvolution self_convolution(double x, double t);

// int u(y,t) u(x-y,t) dy over [-W, W] plus closed tails of its chirp part; W is moved up to a
// multiple of pi t/|x| so the window cuts the linear-phase part at a zero
struct WindowedConvolution {
    double value;
    double window;
};
WindowedConvolution self_convolution_numeric(double x, double t, double window, double tol = 1e-10);

double feynman_kac_trotter(const Potential& p, double x, double t, int n, double box, double tol = 1e-8);
double feynman_kac_halfsum(double c, double x, double t);

struct FKResidual {
    double printed;    // w_tt + (1/2)[w_xxxx - (k w)_xx - k w_xx - k^2 w]
    double corrected;  // w_tt - [-(1/4) w_xxxx + (1/2)(k w)_xx + (1/2) k w_xx - k^2 w]
};
FKResidual feynman_kac_pde_residual(const Potential& p, const std::function<double(double, double)>& w, double x,
                                    double t);

}  // namespace fresnelkit
