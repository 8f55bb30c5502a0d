#pragma once
#include <vector>

#include "fresnelkit/kernel.hpp"
#include "fresnelkit/specfun.hpp"

namespace fresnelkit {

struct DiskSpec {
    double R = 1;
    static DiskSpec make(double R);
};

struct PolarPoint {
    double r;
    double theta;
    // 0 < r < R, theta reduced to [0, 2 pi)
    static PolarPoint make(double r, double theta, const DiskSpec& disk);
};

// (2 pi t)^{-d/2} cos(|x|^2/2t - d pi/4)
double plate_kernel(const std::vector<double>& xs, double t);
double plate_fourier(const std::vector<double>& betas, double t);

// numeric transform of plate_kernel, one dimension at a time (d <= 4)
cplx plate_fourier_numeric(const std::vector<double>& betas, double t, double tol = 1e-9);

// u(x1,t)u(x2,t) - u(x1,x2,t)/2 - cos((x1^2 - x2^2)/2t)/(4 pi t)
double nonfactorization_gap(double x1, double x2, double t);

struct RadialPair {
    double q;  // per unit area up to 2 pi
    double p;  // radial density, p = r q
};

RadialPair disk_heat_kernels(double r, double t, const DiskSpec& disk);
RadialPair disk_vibration_kernels(double r, double t, const DiskSpec& disk);
// (1/2 pi) pbar, the density in (r, theta)
double disk_polar_density(double r, double t, const DiskSpec& disk);

enum class CartesianForm { P, Q };
// the Cartesian expressions as printed, which do not transcribe the polar ones
double disk_density_cartesian(double x, double y, double t, const DiskSpec& disk, CartesianForm which);
// polar forms evaluated at (x, y): pbar/2pi and qbar/2pi
double disk_density_polar_xy(double x, double y, double t, const DiskSpec& disk, CartesianForm which);

struct DiskMass {
    double interior;  // int_0^R (r/t) sin(r^2/2t) dr, by quadrature
    double image;     // image term mapped outside by r' = R^2/r, Fresnel (Abel) value cos(R^2/2t)
    double total;
};
DiskMass disk_mass(double t, const DiskSpec& disk);

// int_a^b of the image term and of its mapped form over [R^2/b, R^2/a]; both by quadrature
struct SubstitutionCheck {
    double direct;
    double mapped;
};
SubstitutionCheck disk_image_substitution(double a, double b, double t, const DiskSpec& disk);

// d qbar/dr at r = R from nodes R - j h, j = 1..6
double disk_neumann_derivative(double t, const DiskSpec& disk, double h = 1e-3);

struct Residual {
    double lhs;       // u_tt
    double rhs;       // spatial part with its sign, lhs + rhs = 0 for a solution
    double residual;  // lhs + rhs
    double relative;  // |residual| / max(|lhs|, |rhs|)
};

enum class RadialTerm { Free, Image, Both };
// u_tt + (1/4) (d_rr + (1/r) d_r)^2 u for the chosen part of qbar
Residual disk_radial_residual(double r, double t, const DiskSpec& disk, RadialTerm term);
// image term under the Kelvin-scaled operator u_tt + (1/4) ((r^4/R^4) Lap)^2 u
Residual disk_image_kelvin_residual(double r, double t, const DiskSpec& disk);

// u_tt + (1/4) Lap^2 u for the d = 2 kernel
Residual plate_pde_residual(double x1, double x2, double t);

struct ProfilePoint {
    double r;
    double qbar;
    double pbar;
};
std::vector<ProfilePoint> disk_profile(double t, const DiskSpec& disk, int n);

SignedKernel plate_kernel_2d();

}  // namespace fresnelkit
