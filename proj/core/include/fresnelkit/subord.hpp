#pragma once
#include "fresnelkit/kernel.hpp"
#include "fresnelkit/report.hpp"

namespace fresnelkit {

struct IterationDepth {
    int n = 0;
    static IterationDepth make(int n);
};

// 2 int_0^inf u(x, s) e^{-s^2/2t} / sqrt(2 pi t) ds
double biquadratic_from_subordination(double x, double t);

double double_cauchy_density(double x, double t);
// int_0^inf u(x, s) t e^{-t^2/2s} / sqrt(2 pi s^3) ds
double double_cauchy_integral(double x, double t);
// (1/2pi)[t e^{i pi/4} / ((t e^{i pi/4})^2 + x^2) + c.c.]
double double_cauchy_decomposed(double x, double t);

struct StencilResidual {
    double residual;
    double scale;  // largest of the stencil terms
    double relative;
};
// u_tttt + u_xxxx with 7-point stencils
StencilResidual double_cauchy_pde_residual(double x, double t);

// cos(2t (beta/2)^{2^{n+1}})
double iterated_charfn(double beta, double t, IterationDepth d);
// Fourier inversion of iterated_charfn along a rotated ray, n <= 3
double iterated_density(double x, double t, IterationDepth d);
// 2 int_0^inf u(x, s) u(s, t) ds, the n = 1 composition integral
double iterated_direct_n1(double x, double t);

// d^2/dt^2 of the characteristic function against the 2^{n+2}-order multiplier, over a (beta, t) grid
VerificationReport iterated_pde_check(IterationDepth d);

SignedKernel biquadratic_kernel();
SignedKernel double_cauchy_kernel();
SignedKernel iterated_kernel(IterationDepth d);

}  // namespace fresnelkit
