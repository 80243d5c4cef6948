#pragma once

#include "hgate/types.hpp"

namespace hgate {

Mat4 mat_mul(const Mat4& a, const Mat4& b);
inline Mat4 operator*(const Mat4& a, const Mat4& b) { return mat_mul(a, b); }

Mat4 adjoint(const Mat4& a);
Mat4 add(const Mat4& a, const Mat4& b);
Mat4 sub(const Mat4& a, const Mat4& b);
Mat4 scaled(const Mat4& a, Complex alpha);
inline Mat4 operator+(const Mat4& a, const Mat4& b) { return add(a, b); }
inline Mat4 operator-(const Mat4& a, const Mat4& b) { return sub(a, b); }

Complex trace(const Mat4& a);
double frobenius_norm(const Mat4& a);
bool all_finite(const Mat4& a);

bool is_hermitian(const Mat4& a, double tol);
bool is_unitary(const Mat4& a, double tol);
bool is_diagonal(const Mat4& a, double tol);

/// Off-diagonal Frobenius mass, the residual used by the diagonalization checks.
double offdiag_norm(const Mat4& a);

/// |trace(a^dag b)| / 4; equals 1 iff a and b agree up to a global phase.
double trace_fidelity(const Mat4& a, const Mat4& b);

struct EigResult {
    std::array<double, 4> values;   // ascending
    Mat4 vectors;                   // orthonormal columns, vectors(:,i) <-> values[i]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Ordering is deterministic: ascending eigenvalue, ties broken by descending
/// magnitude of the first nonzero eigenvector component. Each eigenvector is
/// phase-normalized so its largest-magnitude component is real and positive.
/// Throws NotHermitianError when the input fails the hermiticity tolerance.
EigResult hermitian_eig(const Mat4& a, double input_tol = default_tolerances().input_hermitian);

/// exp(-i h t) for Hermitian h, via eigendecomposition; exactly unitary up to
/// the eigensolver's reconstruction error.
Mat4 expm_i_hermitian(const Mat4& h, double t, double input_tol = default_tolerances().input_hermitian);

} // namespace hgate
