#include "hgate/spin.hpp"

#include "hgate/kernels.hpp"
#include "hgate/linalg.hpp"

#include <cmath>

namespace hgate {

SpinOps build_spin_ops()
{
    // Ladder construction in the descending-m basis |3/2>,|1/2>,|-1/2>,|-3/2>:
    //   <m+1| J+ |m> = sqrt(j(j+1) - m(m+1))
    const double s3 = std::sqrt(3.0);
    Mat4 jp;
    jp(0, 1) = s3;
    jp(1, 2) = 2.0;
    jp(2, 3) = s3;
    const Mat4 jm = adjoint(jp);

    Mat4 j1d = scaled(add(jp, jm), 0.5);
    Mat4 j2d = scaled(sub(jp, jm), Complex(0.0, -0.5));
    Mat4 j3d = Mat4::diag(1.5, 0.5, -0.5, -1.5);

    // Permute into the engine ordering |3/2>,|-3/2>,|1/2>,|-1/2>.
    const int perm[4] = {0, 3, 1, 2};
    auto permute = [&](const Mat4& m) {
        Mat4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                out(r, c) = m(perm[r], perm[c]);
        return out;
    };
    return SpinOps{permute(j1d), permute(j2d), permute(j3d)};
}

void ModelParams::validate() const
{
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
        throw DomainError("omega0 must be a positive finite number");
    if (!(omega1 >= 0.0) || !std::isfinite(omega1))
        throw DomainError("omega1 must be a nonnegative finite number");
    if (!std::isfinite(theta) || theta < 0.0 || theta > theta_max())
        throw DomainError("theta must lie in [0, pi/2); values at or above pi/2 have no finite tan(theta)");
}

Mat4 h0(const ModelParams& p, const SpinOps& ops)
{
    Mat4 h = mat_mul(ops.j3, ops.j3);
    kernels::axpy(h.data(), -1.0, scaled(Mat4::identity(), 1.25).data());
    return scaled(h, p.omega0);
}

namespace {

Mat4 anticomm_half(const Mat4& a, const Mat4& b)
{
    return scaled(add(mat_mul(a, b), mat_mul(b, a)), 0.5);
}

} // namespace

HarmonicHamiltonian harmonic_h_lab(const ModelParams& p, const SpinOps& ops)
{
    const double st = std::sin(p.theta), ct = std::cos(p.theta);
    const Mat4 s11 = mat_mul(ops.j1, ops.j1);
    const Mat4 s22 = mat_mul(ops.j2, ops.j2);
    const Mat4 s33 = mat_mul(ops.j3, ops.j3);
    const Mat4 s12 = anticomm_half(ops.j1, ops.j2);
    const Mat4 s13 = anticomm_half(ops.j1, ops.j3);
    const Mat4 s23 = anticomm_half(ops.j2, ops.j3);

    HarmonicHamiltonian h;
    h.omega1 = p.omega1;
    h.c0 = scaled(add(add(scaled(add(s11, s22), 0.5 * st * st), scaled(s33, ct * ct)),
                      scaled(Mat4::identity(), -1.25)),
                  p.omega0);
    h.c1 = scaled(s13, p.omega0 * 2.0 * st * ct);
    h.c2 = scaled(s23, p.omega0 * 2.0 * st * ct);
    h.c3 = scaled(sub(s11, s22), p.omega0 * 0.5 * st * st);
    h.c4 = scaled(s12, p.omega0 * st * st);
    return h;
}

Mat4 HarmonicHamiltonian::at(double t) const
{
    const double phi = omega1 * t;
    const double cos1 = std::cos(phi), sin1 = std::sin(phi);
    const double cos2 = std::cos(2.0 * phi), sin2 = std::sin(2.0 * phi);
    Mat4 h = c0;
    kernels::axpy(h.data(), cos1, c1.data());
    kernels::axpy(h.data(), sin1, c2.data());
    kernels::axpy(h.data(), cos2, c3.data());
    kernels::axpy(h.data(), sin2, c4.data());
    return h;
}

Mat4 h_lab(double t, const ModelParams& p, const SpinOps& ops)
{
    return harmonic_h_lab(p, ops).at(t);
}

Mat4 h_rot(const ModelParams& p, const SpinOps& ops)
{
    Mat4 h = h0(p, ops);
    kernels::axpy(h.data(), -p.omega1 * std::cos(p.theta), ops.j3.data());
    kernels::axpy(h.data(), p.omega1 * std::sin(p.theta), ops.j1.data());
    return h;
}

Mat4 tilt_rotation(double theta, const SpinOps& ops)
{
    return expm_i_hermitian(ops.j2, theta);
}

Mat4 z_rotation(double t, const ModelParams& p, const SpinOps& ops)
{
    Mat4 u;
    for (int i = 0; i < 4; ++i)
        u(i, i) = std::polar(1.0, -p.omega1 * t * ops.j3(i, i).real());
    return u;
}

Mat4 frame_rotation(double t, const ModelParams& p, const SpinOps& ops)
{
    return mat_mul(z_rotation(t, p, ops), tilt_rotation(p.theta, ops));
}

} // namespace hgate
