#pragma once
#include <complex>

namespace fresnelkit {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kSqrt2 = 1.41421356237309504880168872420969808;
// int_0^inf cos(w^2) dw
inline constexpr double kFresnelLimit = 0.626657068657750125603941321203470259;

struct SeriesControl {
    double rel_tol = 1e-15;
    int max_terms = 500;
};

// sin(pi x) with exact zeros at integers and exact +-1 at half-integers
double sinpi(double x);
double cospi(double x);

cplx gamma(cplx z);
double gamma(double x);
cplx log_gamma(cplx z);
// log|Gamma(x)| and its sign; x must not be a pole
double log_abs_gamma(double x, int* sign = nullptr);
// 1/Gamma, zero at the poles
double rgamma(double x);

struct FresnelCS {
    double C;
    double S;
};
// C(x) = int_0^x cos(w^2) dw, S(x) = int_0^x sin(w^2) dw
FresnelCS fresnel_cs(double x);

cplx airy_ai(cplx z);
double airy_ai(double x);

// modified Bessel I_nu(x), x >= 0, by its power series (moderate x only)
double bessel_i(double nu, double x);

// E_{nu,1}(z); |z| <= 30
cplx mittag_leffler(double nu, cplx z, const SeriesControl& ctl = {});
double mittag_leffler(double nu, double z, const SeriesControl& ctl = {});

// W_{alpha,beta}(z) = sum z^k / (k! Gamma(alpha k + beta))
cplx wright(double alpha, double beta, cplx z, const SeriesControl& ctl = {});
double wright(double alpha, double beta, double z, const SeriesControl& ctl = {});

// M_mu(z) = W_{-mu,1-mu}(-z), 0 < mu < 1. Series near the origin, Kanter integral further out.
cplx m_wright(double mu, cplx z);
double m_wright(double mu, double z);

}  // namespace fresnelkit
