#pragma once

#include "hgate/spin.hpp"
#include "hgate/types.hpp"

namespace hgate {

/// Controls for the time-stepping oracle. The step h is chosen so that
/// rate * h <= step_scale with rate = max(||H||_F, 2 omega1); the second term
/// keeps the drive oscillation resolved when omega1 dominates omega0.
struct IntegratorConfig {
    double step_scale = 0.01;
    long max_steps = 50'000'000;
    double convergence_factor = 10.0;   // step-halving acceptance multiplier
};

struct PropagationResult {
    Mat4 u_numeric;
    double norm_drift = 0.0;   // max deviation of column norms from 1, reported, never corrected
    long steps_taken = 0;      // total RK4 steps including the halved verification pass

    double fidelity_vs(const Mat4& other) const;
};

/// Propagates all four basis columns of the lab-frame Schroedinger equation
/// i dU/dt = H(t) U with classic fixed-step 4th-order stepping, then repeats
/// at half the step and requires agreement within
/// convergence_factor * (t * rate * step_scale^4), the leading truncation
/// bound. Throws StepBudgetExceededError or NoConvergenceError; a norm drift
/// beyond 1e-8 is also an error, never silently fixed.
PropagationResult integrate_lab(const ModelParams& p, double t, const IntegratorConfig& cfg = {});

/// Fidelity between the integrated lab propagator and the closed rotating-
/// frame form U1(t) V exp(-i h_rot t) V^dag. An exact identity up to
/// integration error, since h_rot is time-independent.
double rotating_frame_check(const ModelParams& p, double t, const IntegratorConfig& cfg = {});

} // namespace hgate
