#pragma once
#include "fresnelkit/kernel.hpp"
#include "fresnelkit/specfun.hpp"

namespace fresnelkit {

struct FracOrder {
    double nu = 1;
    // validates 0 < nu <= 1
    static FracOrder make(double nu);
    bool second_ic_applies() const { return nu > 0.5; }
};

struct Diffusivity {
    double lam = 1;
};

struct SeriesDiagnostics {
    double value;
    double max_term;  // largest |term|, same scale as value
    int terms;
};

// u_{2 nu}(x, t) by its power series in |x| / t^{nu/2}
double u2nu_series(double x, double t, FracOrder o, const SeriesControl& ctl = {});
SeriesDiagnostics u2nu_series_diag(double x, double t, FracOrder o, const SeriesControl& ctl = {});

// same function through M_{nu/2} on the e^{i pi/4} ray
double u2nu_wright(double x, double t, FracOrder o);
// series inside its precision region, Wright integral outside
double u2nu_eval(double x, double t, FracOrder o);

// Re of the half-sum of E_{nu,1}(+- i beta^2 t^nu / 2)
double u2nu_fourier(double beta, double t, FracOrder o);
double u2nu_laplace_closed(double x, double mu_L, FracOrder o);

double bernstein_integral(double x, double t);
double bernstein_series(double x, double t);
// series value, checked against the integral
double biquadratic_bernstein(double x, double t);

double u_fourthirds_airy(double x, double t);

// fractional diffusion density v_nu(x, t) = M_{nu/2}(|x|/(lam t^{nu/2})) / (2 lam t^{nu/2})
double fracdiff_wright(double x, double t, FracOrder o, Diffusivity d);

// int_0^inf u(x, s) 2 v_{2 nu}(s, t) ds for nu in {1/3, 1/2}
double u_subordinate(double x, double t, FracOrder o, Diffusivity d);

SignedKernel u2nu_kernel(FracOrder o);
SignedKernel u2nu_series_kernel(FracOrder o);
SignedKernel bernstein_kernel();
SignedKernel fourthirds_kernel();
SignedKernel fracdiff_kernel(FracOrder o, Diffusivity d);
SignedKernel subordinate_kernel(FracOrder o, Diffusivity d);

}  // namespace fresnelkit
