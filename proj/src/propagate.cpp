#include "hgate/propagate.hpp"

#include "hgate/holonomy.hpp"
#include "hgate/kernels.hpp"
#include "hgate/linalg.hpp"

#include <cmath>
#include <string>

namespace hgate {

double PropagationResult::fidelity_vs(const Mat4& other) const
{
    return trace_fidelity(other, u_numeric);
}

namespace {

constexpr Complex kMinusI{0.0, -1.0};

Mat4 rk4_run(const HarmonicHamiltonian& hh, double t, long n)
{
    const double dt = t / static_cast<double>(n);
    Mat4 u = Mat4::identity();
    Mat4 k1, k2, k3, k4, tmp, ht;
    for (long i = 0; i < n; ++i) {
        const double ti = t * (static_cast<double>(i) / static_cast<double>(n));

        ht = hh.at(ti);
        kernels::mat_mul(tmp.data(), ht.data(), u.data());
        k1 = scaled(tmp, kMinusI);

        ht = hh.at(ti + 0.5 * dt);
        tmp = u;
        kernels::axpy(tmp.data(), 0.5 * dt, k1.data());
        kernels::mat_mul(k2.data(), ht.data(), tmp.data());
        k2 = scaled(k2, kMinusI);

        tmp = u;
        kernels::axpy(tmp.data(), 0.5 * dt, k2.data());
        kernels::mat_mul(k3.data(), ht.data(), tmp.data());
        k3 = scaled(k3, kMinusI);

        ht = hh.at(ti + dt);
        tmp = u;
        kernels::axpy(tmp.data(), dt, k3.data());
        kernels::mat_mul(k4.data(), ht.data(), tmp.data());
        k4 = scaled(k4, kMinusI);

        kernels::axpy(u.data(), dt / 6.0, k1.data());
        kernels::axpy(u.data(), dt / 3.0, k2.data());
        kernels::axpy(u.data(), dt / 3.0, k3.data());
        kernels::axpy(u.data(), dt / 6.0, k4.data());
    }
    return u;
}

double column_norm_drift(const Mat4& u)
{
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r) s += std::norm(u(r, c));
        worst = std::max(worst, std::abs(std::sqrt(s) - 1.0));
    }
    return worst;
}

} // namespace

PropagationResult integrate_lab(const ModelParams& p, double t, const IntegratorConfig& cfg)
{
    p.validate();
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be a nonnegative finite number");
    if (!(cfg.step_scale > 0.0) || cfg.step_scale > 0.1)
        throw DomainError("step_scale must lie in (0, 0.1]");

    PropagationResult res;
    if (t == 0.0) {
        res.u_numeric = Mat4::identity();
        return res;
    }

    const SpinOps& ops = spin_ops();
    const HarmonicHamiltonian hh = harmonic_h_lab(p, ops);
    const double rate = std::max(frobenius_norm(hh.at(0.0)), 2.0 * p.omega1);
    const long n = static_cast<long>(std::ceil(t * rate / cfg.step_scale));
    if (n > cfg.max_steps || 2 * n > cfg.max_steps)
        throw StepBudgetExceededError("integration would need " + std::to_string(3 * n) +
                                      " steps, over the budget of " + std::to_string(cfg.max_steps));

    const Mat4 coarse = rk4_run(hh, t, n);
    const Mat4 fine = rk4_run(hh, t, 2 * n);

    const double target = t * rate * std::pow(cfg.step_scale, 4);
    const double disagreement = frobenius_norm(sub(coarse, fine));
    if (disagreement > std::max(cfg.convergence_factor * target, 1e-12))
        throw NoConvergenceError("step-halving disagreement " + std::to_string(disagreement) +
                                 " exceeds the acceptance bound");

    res.u_numeric = fine;
    res.steps_taken = 3 * n;
    res.norm_drift = column_norm_drift(fine);
    if (res.norm_drift > 1e-8)
        throw NoConvergenceError("column norm drift " + std::to_string(res.norm_drift) +
                                 " exceeds 1e-8; the integration is not trustworthy");
    return res;
}

double rotating_frame_check(const ModelParams& p, double t, const IntegratorConfig& cfg)
{
    const SpinOps& ops = spin_ops();
    const Mat4 v = tilt_rotation(p.theta, ops);
    const Mat4 closed = mat_mul(mat_mul(mat_mul(z_rotation(t, p, ops), v),
                                        expm_i_hermitian(h_rot(p, ops), t)),
                                adjoint(v));
    return integrate_lab(p, t, cfg).fidelity_vs(closed);
}

} // namespace hgate
