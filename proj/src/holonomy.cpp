#include "hgate/holonomy.hpp"

#include "hgate/linalg.hpp"

#include <cmath>

namespace hgate {

const SpinOps& spin_ops()
{
    static const SpinOps ops = build_spin_ops();
    return ops;
}

double offblock_norm(const Mat4& m)
{
    double s = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 2; c < 4; ++c)
            s += std::norm(m(r, c)) + std::norm(m(c, r));
    return std::sqrt(s);
}

namespace {

BlockCoeffs project_block(const Mat4& m, int r0, int c0)
{
    const double m00 = m(r0, c0).real();
    const double m01 = m(r0, c0 + 1).real();
    const double m10 = m(r0 + 1, c0).real();
    const double m11 = m(r0 + 1, c0 + 1).real();
    BlockCoeffs out;
    out.a = 0.5 * (m00 + m11);
    out.b = 0.5 * (m00 - m11);
    out.c = 0.5 * (m01 + m10);
    out.e = 0.5 * (m10 - m01);
    return out;
}

void extract_blocks(ConnectionForm& f)
{
    f.a32 = project_block(f.a_full, 0, 0);
    f.a12 = project_block(f.a_full, 2, 2);
    f.a_tr = project_block(f.a_full, 0, 2);
}

} // namespace

ConnectionForm connection_derived(const DiagChain& chain, const SpinOps& ops)
{
    ConnectionForm f;
    f.source = ConnectionSource::derived;
    f.a_full = mat_mul(mat_mul(adjoint(chain.w), ops.j3), chain.w);
    extract_blocks(f);
    return f;
}

ConnectionForm connection_paper(const DiagChain& chain)
{
    const double ca = std::cos(chain.alpha);
    const double sa = std::sin(chain.alpha);
    const auto& b1 = chain.beta1;
    const auto& b2 = chain.beta2;

    const double a32 = 0.25 * (3.0 * b1[0] * b1[0] - 3.0 * b1[1] * b1[1] + b2[0] * b2[0] * ca - b2[1] * b2[1] * ca);
    const double b32 = 0.25 * (3.0 * b1[0] * b1[0] + 3.0 * b1[1] * b1[1] + b2[0] * b2[0] * ca + b2[1] * b2[1] * ca);
    const double c32 = -0.5 * sa * b2[0] * b2[1];
    const double a12 = 0.25 * (3.0 * b2[0] * b2[0] - 3.0 * b2[1] * b2[1] + b1[0] * b1[0] * ca - b1[1] * b1[1] * ca);
    const double b12 = 0.25 * (3.0 * b2[0] * b2[0] + 3.0 * b2[1] * b2[1] + b1[0] * b1[0] * ca + b1[1] * b1[1] * ca);
    const double c12 = -0.5 * sa * b1[0] * b1[1];

    // transfer block: (1/2) beta1 beta2 (3 - cos a) sigma3 + (1/2) sin a beta2 sigma1 beta1
    Mat4 a;
    a(0, 0) = a32 + b32;
    a(1, 1) = a32 - b32;
    a(0, 1) = c32;
    a(1, 0) = c32;
    a(2, 2) = a12 + b12;
    a(3, 3) = a12 - b12;
    a(2, 3) = c12;
    a(3, 2) = c12;
    a(0, 2) = 0.5 * b1[0] * b2[0] * (3.0 - ca);
    a(1, 3) = -0.5 * b1[1] * b2[1] * (3.0 - ca);
    a(0, 3) = 0.5 * sa * b2[0] * b1[1];
    a(1, 2) = 0.5 * sa * b2[1] * b1[0];
    // lower-left = transpose of the transfer block
    a(2, 0) = a(0, 2);
    a(3, 1) = a(1, 3);
    a(3, 0) = a(0, 3);
    a(2, 1) = a(1, 2);

    ConnectionForm f;
    f.source = ConnectionSource::paper_literal;
    f.a_full = a;
    extract_blocks(f);
    return f;
}

GateResult gate(const ModelParams& p, double t)
{
    const SpinOps& ops = spin_ops();
    return gate(p, t, ops, diagonalize(p, ops));
}

GateResult gate(const ModelParams& p, double t, const SpinOps& ops, const DiagChain& chain)
{
    p.validate();
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("t must be a nonnegative finite number");

    GateResult g;
    g.params = p;
    g.t = t;

    Mat4 u_dyn;
    for (int i = 0; i < 4; ++i) u_dyn(i, i) = std::polar(1.0, -chain.h_d[i] * t);
    g.u_dynamic = u_dyn;

    const ConnectionForm conn = connection_derived(chain, ops);
    g.u_geometric = expm_i_hermitian(conn.a_full, p.omega1 * t);

    // Lab propagator: U1(t) * V * w * exp(-i h_d t) * w^dag * V^dag, where
    // V = exp(-i theta J2) carries the tilt between the co-rotating frame and
    // the frame h_rot lives in.
    const Mat4 v = tilt_rotation(p.theta, ops);
    const Mat4 core = mat_mul(mat_mul(chain.w, u_dyn), adjoint(chain.w));
    g.u_gate = mat_mul(mat_mul(mat_mul(z_rotation(t, p, ops), v), core), adjoint(v));
    return g;
}

MixingReport characterize_gate(const GateResult& g)
{
    MixingReport rep;
    for (int c = 0; c < 4; ++c) {
        int n = 0;
        for (int r = 0; r < 4; ++r)
            if (std::norm(g.u_gate(r, c)) > 0.01) ++n;
        rep.participation[c] = n;
    }
    rep.transfer_norm = offblock_norm(g.u_gate);
    const Mat4 v = tilt_rotation(g.params.theta, spin_ops());
    rep.transfer_norm_energy = offblock_norm(mat_mul(mat_mul(adjoint(v), g.u_gate), v));
    return rep;
}

} // namespace hgate
