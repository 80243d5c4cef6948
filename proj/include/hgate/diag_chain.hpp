#pragma once

#include "hgate/spin.hpp"
#include "hgate/types.hpp"

namespace hgate {

/// All intermediate data of the two-step diagonalization of h_rot, plus the
/// exact diagonalizer w.
///
/// u2 is the block rotation removing the sigma1 term of the lower 2x2 block
/// (tan(alpha) = 2 tan(theta)); u3 is the beta-parameterized pair mixer. The
/// closed-form chain u2*u3 does not fully diagonalize h_rot: u2 rotates the
/// cross block away from a multiple of the identity, so the per-pair beta
/// conditions leave a residual coupling. w completes the chain with an exact
/// eigensolve of that residual (slot-preserving), and chain_residual records
/// the relative off-diagonal mass u2*u3 alone leaves behind. The reconciliation
/// report tabulates this gap; all propagator math uses w.
struct DiagChain {
    double alpha = 0.0;
    Mat4 u2, u3, w;
    std::array<double, 2> lambda1{}, lambda2{};
    double xi = 0.0;
    std::array<double, 2> k{}, mu{};
    std::array<double, 2> beta1{}, beta2{};
    std::array<double, 4> h_d{};    // diagonal of w^dag h_rot w, basis slots kept
    bool degenerate = false;        // |xi| under the floor: identity shortcut taken
    double chain_residual = 0.0;
};

/// alpha from tan(alpha) = 2 tan(theta); domain [0, pi/2), strictly increasing.
double alpha_of_theta(double theta);

struct LambdasXi {
    std::array<double, 2> lambda1, lambda2;
    double xi;
};

/// Diagonal-block eigenvalue pairs and the cross-pair coupling strength:
///   lambda1 = omega0 -+ (3/2) omega1 cos(theta)
///   lambda2 = -omega0 -+ (1/2) omega1 cos(theta)/cos(alpha)
///   xi      = omega1 (sqrt(3)/2) sin(theta)
LambdasXi lambdas_xi(const ModelParams& p, double alpha);

struct MuK {
    std::array<double, 2> k, mu;
};

/// k_i = (lambda1_i - lambda2_i) / (2 xi) and mu_i = k_i + sqrt(1 + k_i^2),
/// the positive root of the pair-mixing quadratic. Throws
/// DegenerateCouplingError when |xi| <= xi_floor (the identity-shortcut path).
MuK mu_k(const std::array<double, 2>& lambda1, const std::array<double, 2>& lambda2,
         double xi, double xi_floor);

/// Floor below which the cross-pair coupling is treated as absent.
double xi_floor_for(const ModelParams& p);

struct Betas {
    std::array<double, 2> beta1, beta2;
};

/// Mixing amplitudes, nonnegative roots with beta1^2 + beta2^2 = 1 and
/// beta2 = mu * beta1. Evaluated through mu so large |k| stays well
/// conditioned; algebraically identical to
///   beta1_i^2 = (1/2)(1+k^2)^(-1/2) (k + sqrt(1+k^2))^(-1)
///   beta2_i^2 = (1/2)(1 + k/sqrt(1+k^2))
Betas betas(const std::array<double, 2>& k);

/// Block-diagonal rotation: identity on the (|3/2>,|-3/2>) pair, and on the
/// (|1/2>,|-1/2>) pair the half-angle rotation taking the lower block of
/// h_rot to sigma3-only form, -omega0 - (1/2) omega1 (cos(theta)/cos(alpha)) sigma3.
Mat4 build_u2(double alpha);

/// Pair mixer [[beta1, beta2], [-beta2, beta1]] with diagonal 2x2 beta blocks;
/// real orthogonal, determinant +1. Throws UnitarityViolationError if
/// beta1_i^2 + beta2_i^2 deviates from 1 beyond 1e-10.
Mat4 build_u3(const std::array<double, 2>& beta1, const std::array<double, 2>& beta2);

/// Runs the full chain for p and returns every intermediate, including the
/// exact diagonalizer w with w^dag h_rot w = diag(h_d) to machine precision.
DiagChain diagonalize(const ModelParams& p, const SpinOps& ops);

} // namespace hgate
