#pragma once

#include "hgate/types.hpp"

namespace hgate {

/// Spin-3/2 angular momentum operators in the global basis ordering
/// (|3/2>, |-3/2>, |1/2>, |-1/2>). Constructed once from the ladder algebra;
/// exactly Hermitian by construction.
struct SpinOps {
    Mat4 j1, j2, j3;
};

SpinOps build_spin_ops();

/// Physical inputs of the model. omega0 is the quadrupole frequency, omega1
/// the field rotation frequency, theta the tilt of the rotation axis.
struct ModelParams {
    double omega0 = 1.0;
    double omega1 = 0.0;
    double theta = 0.0;

    /// Throws DomainError naming the offending field. theta is capped
    /// strictly below pi/2 so tan(theta) stays finite.
    void validate() const;
};

/// Largest accepted tilt angle; tan(theta) beyond this is numerically useless.
inline constexpr double theta_max() { return 1.5707962268; } // pi/2 - 1e-7

/// Static quadrupole Hamiltonian omega0 * (J3^2 - 5/4). Diagonal,
/// eigenvalues {+omega0 (x2), -omega0 (x2)}.
Mat4 h0(const ModelParams& p, const SpinOps& ops);

/// Lab-frame Hamiltonian omega0 * ((J.n)^2 - 5/4) with the field axis
/// n = (sin(theta)cos(omega1 t), sin(theta)sin(omega1 t), cos(theta)).
Mat4 h_lab(double t, const ModelParams& p, const SpinOps& ops);

/// Time-independent rotating-frame Hamiltonian in the tilt-corrected frame:
///   h_rot = h0 - omega1 * (cos(theta) J3 - sin(theta) J1)
/// Block pattern: upper block omega0 - (3/2) omega1 cos(theta) sigma3; lower
/// block -omega0 - (1/2) omega1 cos(theta) sigma3 + omega1 sin(theta) sigma1;
/// cross blocks (sqrt(3)/2) omega1 sin(theta) * I.
Mat4 h_rot(const ModelParams& p, const SpinOps& ops);

/// R(t) = exp(-i omega1 t J3) exp(-i theta J2); h_lab(t) = R h0 R^dag.
Mat4 frame_rotation(double t, const ModelParams& p, const SpinOps& ops);

/// The tilt factor exp(-i theta J2) relating the rotating frame of h_rot to
/// the frame co-rotating about z.
Mat4 tilt_rotation(double theta, const SpinOps& ops);

/// exp(-i omega1 t J3), the z-rotation at time t (diagonal, exact).
Mat4 z_rotation(double t, const ModelParams& p, const SpinOps& ops);

/// h_lab(t) decomposed over the drive harmonics,
///   H(t) = c0 + cos(w1 t) c1 + sin(w1 t) c2 + cos(2 w1 t) c3 + sin(2 w1 t) c4,
/// so the integrator can evaluate it with four axpys per call.
struct HarmonicHamiltonian {
    Mat4 c0, c1, c2, c3, c4;
    double omega1 = 0.0;

    Mat4 at(double t) const;
};

HarmonicHamiltonian harmonic_h_lab(const ModelParams& p, const SpinOps& ops);

} // namespace hgate
