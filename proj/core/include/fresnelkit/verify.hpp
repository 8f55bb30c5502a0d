#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "fresnelkit/kernel.hpp"
#include "fresnelkit/report.hpp"

namespace fresnelkit {

// x in [x_lo, x_hi], t in [t_lo, t_hi]
struct Box {
    double x_lo, x_hi, t_lo, t_hi;
};

enum class PdeOp {
    Rod,              // u_tt + (1/4) (d_xx - mu d_x)^2 u, mu from params["mu_drift"] when present
    Plate2D,          // u_tt + (1/4) Lap^2 u on eval2, grid x grid in space times {t_lo, t_hi}
    Biharmonic4t4x,   // u_tttt + u_xxxx
    BiquadraticHeat,  // u_t + (1/8) u_xxxx
};

const char* pde_op_name(PdeOp op);

// max over the grid of |residual| / max(1, larger of the two sides); tolerance 1e-3
VerificationReport pde_residual_scan(const SignedKernel& k, PdeOp op, const Box& box, int grid,
                                     std::string check_name = {});

// FRESNELKIT_SEED when set, else the built-in default
std::uint64_t verification_seed();

const std::vector<std::string>& suite_names();

// specfun, quad, rod, fracrod, plates, pseudo, subord or all; sorted by check_name
std::vector<VerificationReport> run_suite(const std::string& name);

}  // namespace fresnelkit
