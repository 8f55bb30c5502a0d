#pragma once
#include <functional>
#include <optional>

#include "fresnelkit/kernel.hpp"

namespace fresnelkit {

struct DriftSpec {
    double mu_drift = 0;
};

enum class Boundary { Absorbing, Reflecting, Elastic };

struct BoundarySpec {
    Boundary kind = Boundary::Reflecting;
    double alpha = 0;
    double y = 1;
    std::optional<double> L;  // finite rod when set

    static BoundarySpec absorbing(double y);
    static BoundarySpec reflecting(double y);
    // alpha = 0 collapses to Reflecting
    static BoundarySpec elastic(double alpha, double y);
    static BoundarySpec finite_reflecting(double y, double L);
};

const char* boundary_name(Boundary b);

double fresnel_kernel(double x, double t);
double fresnel_kernel_drift(double x, double t, DriftSpec d);

double halfline_solution(double x, double t, const BoundarySpec& b);

// The two elastic representations, exposed for cross-checking.
// form 2: images sum - 2 alpha e^{alpha s} int_s^inf e^{-alpha w} cos(w^2/2t - pi/4) dw / sqrt(2 pi t)
// form 1: images difference + 2 e^{alpha s} int_s^inf w e^{-alpha w} cos(w^2/2t - 3pi/4) dw / sqrt(2 pi t^3)
double elastic_form2(double x, double t, double alpha, double y);
double elastic_form1(double x, double t, double alpha, double y);

struct FiniteRodValue {
    double value;
    bool converged;       // |S_K - S_{K-1}| <= 1e-8
    double last_increment;
};

FiniteRodValue finite_rod_solution(double x, double t, const BoundarySpec& b, int K);
// symmetric image sum over k in [-K, K], defined for every real x
double finite_rod_image_sum(double x, double t, double y, double L, int K);

double survival_measure(double y, double t, const BoundarySpec& b);
// (1/sqrt(2 pi t)) [ int_{-y}^{y} cos + 2 e^{alpha y} int_y^inf e^{-alpha w} cos ]
double elastic_survival_closed(double y, double t, double alpha);

// k-th positive zero of cos(x^2/2t - pi/4), k >= 0
double fresnel_root(int k, double t);
// sqrt(2 pi (3/2 + k)) sqrt(t), the printed root points
double printed_root_point(int k, double t);

SignedKernel free_kernel();
SignedKernel drift_kernel(DriftSpec d);
SignedKernel halfline_kernel(const BoundarySpec& b);
SignedKernel finite_rod_kernel(const BoundarySpec& b, int K);

// int_0^inf u(x, s) rho(s) ds for a time density rho on s > 0 (callers pass folded densities).
// The Fresnel oscillation at small s is removed with v = x^2/(2s).
// s_max: rho is negligible beyond it (infinite means algebraic decay, handled with q = 1/s).
double fresnel_time_average(double x, const std::function<double(double)>& rho, double s_max, double tol);

}  // namespace fresnelkit
