#include "hgate/checks.hpp"

#include "hgate/diag_chain.hpp"
#include "hgate/errata.hpp"
#include "hgate/holonomy.hpp"
#include "hgate/kernels.hpp"
#include "hgate/linalg.hpp"
#include "hgate/propagate.hpp"
#include "hgate/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace hgate {

std::uint64_t CheckRng::next_u64()
{
    // splitmix64; fixed algorithm so sequences never depend on the platform
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double CheckRng::uniform(double lo, double hi)
{
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double CheckRng::log_uniform(double lo, double hi)
{
    return lo * std::pow(hi / lo, uniform(0.0, 1.0));
}

namespace {

struct Collector {
    std::vector<CheckResult> results;
    const CheckOptions& opt;

    explicit Collector(const CheckOptions& o) : opt(o) {}

    void upper(const std::string& name, double worst, double tol, std::string detail = {})
    {
        const double use_tol = opt.tol_override > 0.0 ? opt.tol_override : tol;
        results.push_back({name, worst, use_tol, false, worst <= use_tol, std::move(detail)});
    }

    void at_least(const std::string& name, double value, double floor, std::string detail = {})
    {
        results.push_back({name, value, floor, true, value >= floor, std::move(detail)});
    }
};

Mat4 random_hermitian(CheckRng& rng, double scale)
{
    Mat4 m;
    for (int r = 0; r < 4; ++r) {
        m(r, r) = rng.uniform(-scale, scale);
        for (int c = r + 1; c < 4; ++c) {
            m(r, c) = Complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

ModelParams random_params(CheckRng& rng)
{
    return ModelParams{rng.uniform(0.1, 10.0), rng.uniform(0.0, 10.0), rng.uniform(0.0, 1.4)};
}

Mat4 commutator(const Mat4& a, const Mat4& b)
{
    return sub(mat_mul(a, b), mat_mul(b, a));
}

Mat4 closed_form_lab(const ModelParams& p, double t, const SpinOps& ops)
{
    const Mat4 v = tilt_rotation(p.theta, ops);
    return mat_mul(mat_mul(mat_mul(z_rotation(t, p, ops), v),
                           expm_i_hermitian(h_rot(p, ops), t)),
                   adjoint(v));
}

} // namespace

std::vector<CheckResult> checks_algebra(const CheckOptions& opt)
{
    Collector col(opt);
    const SpinOps& ops = spin_ops();
    const Complex im(0.0, 1.0);

    double worst = 0.0;
    worst = std::max(worst, frobenius_norm(sub(commutator(ops.j1, ops.j2), scaled(ops.j3, im))));
    worst = std::max(worst, frobenius_norm(sub(commutator(ops.j2, ops.j3), scaled(ops.j1, im))));
    worst = std::max(worst, frobenius_norm(sub(commutator(ops.j3, ops.j1), scaled(ops.j2, im))));
    col.upper("algebra.su2_commutators", worst, 1e-14);

    const Mat4 casimir = add(add(mat_mul(ops.j1, ops.j1), mat_mul(ops.j2, ops.j2)),
                             mat_mul(ops.j3, ops.j3));
    col.upper("algebra.casimir", frobenius_norm(sub(casimir, scaled(Mat4::identity(), 3.75))), 1e-14);

    col.upper("algebra.j3_diagonal",
              frobenius_norm(sub(ops.j3, Mat4::diag(1.5, -1.5, 0.5, -0.5))), 1e-14);

    const double s32 = std::sqrt(3.0) / 2.0;
    Mat4 j1_expected;
    j1_expected(0, 2) = j1_expected(2, 0) = s32;
    j1_expected(1, 3) = j1_expected(3, 1) = s32;
    j1_expected(2, 3) = j1_expected(3, 2) = 1.0;
    col.upper("algebra.j1_pattern", frobenius_norm(sub(ops.j1, j1_expected)), 1e-15);

    double herm = 0.0;
    herm = std::max(herm, frobenius_norm(sub(ops.j1, adjoint(ops.j1))));
    herm = std::max(herm, frobenius_norm(sub(ops.j2, adjoint(ops.j2))));
    herm = std::max(herm, frobenius_norm(sub(ops.j3, adjoint(ops.j3))));
    col.upper("algebra.exact_hermiticity", herm, 0.0);
    return col.results;
}

std::vector<CheckResult> checks_linalg(const CheckOptions& opt)
{
    Collector col(opt);
    CheckRng rng(opt.seed ^ 0x11);
    const int n = opt.quick ? 100 : 1000;

    double worst_rec = 0.0, worst_orth = 0.0, worst_order = 0.0;
    for (int i = 0; i < n; ++i) {
        const Mat4 a = random_hermitian(rng, rng.log_uniform(1e-2, 1e3));
        const EigResult e = hermitian_eig(a);
        Mat4 rec = mat_mul(mat_mul(e.vectors, Mat4::diag(e.values)), adjoint(e.vectors));
        worst_rec = std::max(worst_rec, frobenius_norm(sub(rec, a)) / std::max(frobenius_norm(a), 1e-300));
        worst_orth = std::max(worst_orth, frobenius_norm(sub(mat_mul(adjoint(e.vectors), e.vectors), Mat4::identity())));
        for (int k = 0; k < 3; ++k)
            worst_order = std::max(worst_order, std::max(0.0, e.values[k] - e.values[k + 1]));
    }
    col.upper("linalg.eig_reconstruction", worst_rec, 1e-12);
    col.upper("linalg.eig_orthonormality", worst_orth, 1e-12);
    col.upper("linalg.eig_ascending", worst_order, 0.0);

    double worst_unit = 0.0, worst_group = 0.0;
    for (int i = 0; i < (opt.quick ? 20 : 100); ++i) {
        const Mat4 h = random_hermitian(rng, 2.0);
        const double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
        const Mat4 u = expm_i_hermitian(h, s + t);
        worst_unit = std::max(worst_unit, frobenius_norm(sub(mat_mul(adjoint(u), u), Mat4::identity())));
        worst_group = std::max(worst_group,
                               frobenius_norm(sub(u, mat_mul(expm_i_hermitian(h, s), expm_i_hermitian(h, t)))));
    }
    col.upper("linalg.expm_unitarity", worst_unit, 1e-12);
    col.upper("linalg.expm_group_law", worst_group, 1e-11);

    const SpinOps& ops = spin_ops();
    col.upper("linalg.expm_j3_full_turn",
              frobenius_norm(add(expm_i_hermitian(ops.j3, 2.0 * M_PI), Mat4::identity())), 1e-13);

    // scalar vs SIMD kernel equivalence
    double worst_kernel = 0.0;
    const bool have_simd = kernels::isa_supported(kernels::Isa::avx2);
    if (have_simd) {
#if HGATE_HAVE_AVX2_KERNELS
        for (int i = 0; i < (opt.quick ? 50 : 500); ++i) {
            Mat4 a = random_hermitian(rng, 10.0), b = random_hermitian(rng, 10.0);
            Mat4 cs, cv;
            kernels::scalar::mat_mul(cs.data(), a.data(), b.data());
            kernels::avx2::mat_mul(cv.data(), a.data(), b.data());
            worst_kernel = std::max(worst_kernel,
                                    frobenius_norm(sub(cs, cv)) / std::max(frobenius_norm(cs), 1e-300));
            Mat4 ys = a, yv = a;
            const Complex alpha(rng.uniform(-2, 2), rng.uniform(-2, 2));
            kernels::scalar::axpy(ys.data(), alpha, b.data());
            kernels::avx2::axpy(yv.data(), alpha, b.data());
            worst_kernel = std::max(worst_kernel,
                                    frobenius_norm(sub(ys, yv)) / std::max(frobenius_norm(ys), 1e-300));
            const double fs = kernels::scalar::fro_norm_sq(a.data());
            const double fv = kernels::avx2::fro_norm_sq(a.data());
            worst_kernel = std::max(worst_kernel, std::abs(fs - fv) / std::max(fs, 1e-300));
        }
#endif
        col.upper("linalg.kernel_equivalence", worst_kernel, 2e-15,
                  "active isa: " + kernels::isa_name(kernels::active_isa()));
    } else {
        col.upper("linalg.kernel_equivalence", 0.0, 2e-15, "simd not available on this host; scalar only");
    }
    return col.results;
}

std::vector<CheckResult> checks_spin_model(const CheckOptions& opt)
{
    Collector col(opt);
    CheckRng rng(opt.seed ^ 0x22);
    const SpinOps& ops = spin_ops();

    const ModelParams unit{1.0, 0.0, 0.0};
    col.upper("spin.h0_values",
              frobenius_norm(sub(h0(unit, ops), Mat4::diag(1.0, 1.0, -1.0, -1.0))), 1e-14);

    double worst_conj = 0.0, worst_spec = 0.0, worst_period = 0.0, worst_rot = 0.0;
    for (int i = 0; i < (opt.quick ? 20 : 100); ++i) {
        const ModelParams p = random_params(rng);
        const double t = rng.uniform(0.0, 20.0);
        const Mat4 hl = h_lab(t, p, ops);
        const Mat4 r = frame_rotation(t, p, ops);
        worst_conj = std::max(worst_conj,
                              frobenius_norm(sub(hl, mat_mul(mat_mul(r, h0(p, ops)), adjoint(r)))) /
                                  std::max(frobenius_norm(hl), 1e-300));
        const EigResult e = hermitian_eig(hl);
        worst_spec = std::max({worst_spec,
                               std::abs(e.values[0] + p.omega0), std::abs(e.values[1] + p.omega0),
                               std::abs(e.values[2] - p.omega0), std::abs(e.values[3] - p.omega0)});
        if (p.omega1 > 1e-3) {
            const double period = 2.0 * M_PI / p.omega1;
            worst_period = std::max(worst_period, frobenius_norm(sub(h_lab(0.0, p, ops), h_lab(period, p, ops))) /
                                                      std::max(frobenius_norm(hl), 1e-300));
        }
        // h_rot from first principles: tilt-conjugated co-rotating-frame Hamiltonian
        const Mat4 v = tilt_rotation(p.theta, ops);
        const Mat4 u1 = z_rotation(t, p, ops);
        Mat4 k = mat_mul(mat_mul(adjoint(u1), hl), u1);
        kernels::axpy(k.data(), -p.omega1, ops.j3.data());
        const Mat4 hr = mat_mul(mat_mul(adjoint(v), k), v);
        worst_rot = std::max(worst_rot, frobenius_norm(sub(hr, h_rot(p, ops))) /
                                            std::max(frobenius_norm(hr), 1e-300));
    }
    col.upper("spin.h_lab_rotation_conjugation", worst_conj, 1e-12);
    col.upper("spin.h_lab_isospectral", worst_spec, 1e-12);
    col.upper("spin.h_lab_periodicity", worst_period, 1e-12);
    col.upper("spin.h_rot_first_principles", worst_rot, 1e-12);

    // transfer entries of h_rot carry omega1 sin(theta)
    const ModelParams p{1.0, 0.8, 0.6};
    const Mat4 hr = h_rot(p, ops);
    const double expect = p.omega1 * std::sin(p.theta);
    col.upper("spin.h_rot_lower_coupling",
              std::abs(hr(2, 3).real() - expect) + std::abs(hr(3, 2).real() - expect), 1e-15);
    return col.results;
}

std::vector<CheckResult> checks_diagonalization(const CheckOptions& opt)
{
    Collector col(opt);
    CheckRng rng(opt.seed ^ 0x33);
    const SpinOps& ops = spin_ops();
    const int n = opt.quick ? 40 : 200;

    double worst_off = 0.0, worst_wu = 0.0, worst_b1 = 0.0, worst_b18 = 0.0;
    double worst_mu = 0.0, worst_alpha = 0.0, worst_spec = 0.0;
    for (int i = 0; i < n; ++i) {
        const ModelParams p = random_params(rng);
        const DiagChain ch = diagonalize(p, ops);
        const Mat4 h = h_rot(p, ops);
        const double hn = std::max(frobenius_norm(h), 1e-300);

        const Mat4 d = mat_mul(mat_mul(adjoint(ch.w), h), ch.w);
        worst_off = std::max(worst_off, offdiag_norm(d) / hn);
        worst_wu = std::max(worst_wu, frobenius_norm(sub(mat_mul(adjoint(ch.w), ch.w), Mat4::identity())));

        worst_alpha = std::max(worst_alpha,
                               std::abs(std::tan(ch.alpha) - 2.0 * std::tan(p.theta)) /
                                   std::max(1.0, 2.0 * std::tan(p.theta)));

        if (!ch.degenerate) {
            for (int j = 0; j < 2; ++j) {
                worst_b1 = std::max(worst_b1,
                                    std::abs(ch.beta1[j] * ch.beta1[j] + ch.beta2[j] * ch.beta2[j] - 1.0));
                const double dl = ch.lambda1[j] - ch.lambda2[j];
                const double scale = std::max(std::abs(ch.xi), std::abs(dl));
                worst_b18 = std::max(worst_b18,
                                     std::abs(ch.xi * (ch.beta1[j] * ch.beta1[j] - ch.beta2[j] * ch.beta2[j]) +
                                              dl * ch.beta1[j] * ch.beta2[j]) /
                                         std::max(scale, 1e-300));
                const double mu_ref = ch.k[j] >= 0.0
                                          ? ch.k[j] + std::sqrt(1.0 + ch.k[j] * ch.k[j])
                                          : 1.0 / (std::sqrt(1.0 + ch.k[j] * ch.k[j]) - ch.k[j]);
                worst_mu = std::max(worst_mu, std::abs(ch.mu[j] - mu_ref) / mu_ref);
                worst_mu = std::max(worst_mu,
                                    std::abs(ch.beta2[j] - ch.mu[j] * ch.beta1[j]) /
                                        std::max(1.0, std::abs(ch.beta2[j])));
            }
        }

        const EigResult e = hermitian_eig(h);
        std::array<double, 4> hd_sorted = ch.h_d;
        std::sort(hd_sorted.begin(), hd_sorted.end());
        for (int j = 0; j < 4; ++j)
            worst_spec = std::max(worst_spec, std::abs(hd_sorted[j] - e.values[j]) / std::max(1.0, std::abs(e.values[j])));
    }
    col.upper("diag.offdiagonal_mass", worst_off, 1e-10);
    col.upper("diag.w_unitarity", worst_wu, 1e-12);
    col.upper("diag.beta_unitarity", worst_b1, 1e-10);
    col.upper("diag.beta_balance_condition", worst_b18, 1e-10);
    col.upper("diag.mu_identities", worst_mu, 1e-12);
    col.upper("diag.alpha_tan_relation", worst_alpha, 1e-14);
    col.upper("diag.hd_spectrum_match", worst_spec, 1e-10);

    // strict monotonicity of alpha(theta)
    double prev = -1.0;
    bool monotone = true;
    for (int i = 0; i <= 140; ++i) {
        const double a = alpha_of_theta(0.01 * i);
        if (a <= prev) monotone = false;
        prev = a;
    }
    col.upper("diag.alpha_strictly_increasing", monotone ? 0.0 : 1.0, 0.0);

    // continuity at theta -> 0 of the branch-independent outputs (the pinned
    // positive pair-mixing root makes u3/w themselves jump there)
    {
        const ModelParams p0{1.0, 1.0, 0.0};
        const ModelParams pe{1.0, 1.0, 1e-6};
        const GateResult g0 = gate(p0, 1.0);
        const GateResult ge = gate(pe, 1.0);
        col.upper("diag.theta_to_zero_gate_continuity",
                  frobenius_norm(sub(g0.u_gate, ge.u_gate)), 1e-4);
        const DiagChain c0 = diagonalize(p0, ops);
        const DiagChain ce = diagonalize(pe, ops);
        std::array<double, 4> s0 = c0.h_d, se = ce.h_d;
        std::sort(s0.begin(), s0.end());
        std::sort(se.begin(), se.end());
        double w = 0.0;
        for (int j = 0; j < 4; ++j) w = std::max(w, std::abs(s0[j] - se[j]));
        col.upper("diag.theta_to_zero_spectrum_continuity", w, 1e-4);
    }
    return col.results;
}

std::vector<CheckResult> checks_connection(const CheckOptions& opt)
{
    Collector col(opt);
    CheckRng rng(opt.seed ^ 0x44);
    const SpinOps& ops = spin_ops();
    const int n = opt.quick ? 40 : 200;

    double worst_herm = 0.0, worst_trace = 0.0, worst_spec = 0.0;
    for (int i = 0; i < n; ++i) {
        const ModelParams p = random_params(rng);
        const DiagChain ch = diagonalize(p, ops);
        const ConnectionForm a = connection_derived(ch, ops);
        worst_herm = std::max(worst_herm, frobenius_norm(sub(a.a_full, adjoint(a.a_full))));
        worst_trace = std::max(worst_trace, std::abs(trace(a.a_full)));
        const EigResult e = hermitian_eig(a.a_full);
        const double target[4] = {-1.5, -0.5, 0.5, 1.5};
        for (int j = 0; j < 4; ++j)
            worst_spec = std::max(worst_spec, std::abs(e.values[j] - target[j]));
    }
    col.upper("conn.hermitian", worst_herm, 1e-12);
    col.upper("conn.traceless", worst_trace, 1e-12);
    col.upper("conn.spectrum_pm_3half_1half", worst_spec, 1e-10);

    const ModelParams p0{1.0, 0.7, 0.0};
    const ConnectionForm a0 = connection_derived(diagonalize(p0, ops), ops);
    col.upper("conn.theta0_equals_j3", frobenius_norm(sub(a0.a_full, ops.j3)), 0.0);
    return col.results;
}

std::vector<CheckResult> checks_oracle(const CheckOptions& opt)
{
    Collector col(opt);
    const SpinOps& ops = spin_ops();
    IntegratorConfig cfg;
    cfg.step_scale = opt.step_scale;

    // the acceptance grid: omega0 = 1, three drive ratios, three tilts, three horizons
    struct Point {
        ModelParams p;
        double t;
    };
    std::vector<Point> grid;
    const double ratios[3] = {0.1, 1.0, 10.0};
    const double thetas[3] = {M_PI / 6.0, M_PI / 4.0, M_PI / 3.0};
    const double periods[3] = {1.0, 5.0, 10.0};
    for (double r : ratios)
        for (double th : thetas)
            for (double k : periods) {
                if (opt.quick && k != 1.0) continue; // single-period subset
                grid.push_back({ModelParams{1.0, r, th}, k * 2.0 * M_PI / r});
            }

    std::vector<double> infid(grid.size(), 0.0), drift(grid.size(), 0.0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
            try {
                const GateResult g = gate(grid[i].p, grid[i].t);
                const PropagationResult pr = integrate_lab(grid[i].p, grid[i].t, cfg);
                infid[i] = 1.0 - pr.fidelity_vs(g.u_gate);
                drift[i] = pr.norm_drift;
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    {
        const unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w + 1 < nthreads; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);

    col.upper("oracle.gate_grid_infidelity", *std::max_element(infid.begin(), infid.end()), 1e-6,
              std::to_string(grid.size()) + " grid points");
    col.upper("oracle.norm_drift", *std::max_element(drift.begin(), drift.end()), 1e-8);

    // static field: the integrator against the analytic diagonal exponential
    {
        const ModelParams p{1.0, 0.0, 0.0};
        const double t = 10.0;
        const PropagationResult pr = integrate_lab(p, t, cfg);
        Mat4 exact;
        const double ev[4] = {1.0, 1.0, -1.0, -1.0};
        for (int i = 0; i < 4; ++i) exact(i, i) = std::polar(1.0, -ev[i] * t);
        col.upper("oracle.static_field", frobenius_norm(sub(pr.u_numeric, exact)), 1e-8);
    }

    // random rotating-frame identity checks across three decades of drive ratio
    {
        CheckRng rng(opt.seed ^ 0x55);
        double worst = 0.0;
        const int n = opt.quick ? 5 : 20;
        for (int i = 0; i < n; ++i) {
            ModelParams p;
            p.omega0 = rng.uniform(0.5, 2.0);
            p.omega1 = p.omega0 * rng.log_uniform(0.01, 10.0);
            p.theta = rng.uniform(0.0, 1.4);
            const double t = rng.uniform(0.5, 25.0);
            worst = std::max(worst, 1.0 - rotating_frame_check(p, t, cfg));
        }
        col.upper("oracle.rotating_frame_random", worst, 1e-6);
    }

    // theta = 0 reduces both routes to the same static exponential
    {
        const ModelParams p{1.0, 0.9, 0.0};
        col.upper("oracle.rotating_frame_theta0", 1.0 - rotating_frame_check(p, 7.0, cfg), 1e-9);
    }
    (void)ops;
    return col.results;
}

std::vector<CheckResult> checks_composition(const CheckOptions& opt)
{
    Collector col(opt);
    const SpinOps& ops = spin_ops();
    const struct {
        ModelParams p;
        double t;
    } pts[5] = {
        {{1.0, 0.5, M_PI / 6.0}, 4.0 * M_PI},
        {{1.0, 1.0, M_PI / 4.0}, 2.0 * M_PI},
        {{1.0, 0.1, M_PI / 3.0}, 10.0},
        {{2.0, 3.0, 0.9}, 5.0},
        {{0.5, 4.0, 1.2}, 3.0},
    };
    double worst_geo = 0.0, worst_rot = 0.0, worst_aform = 0.0;
    for (const auto& pt : pts) {
        const DiagChain ch = diagonalize(pt.p, ops);
        const ConnectionForm conn = connection_derived(ch, ops);
        const Mat4 hr = h_rot(pt.p, ops);
        for (int n : {2, 10, 100}) {
            const Mat4 geo_sub = expm_i_hermitian(conn.a_full, pt.p.omega1 * pt.t / n);
            const Mat4 rot_sub = expm_i_hermitian(hr, pt.t / n);
            Mat4 geo = Mat4::identity(), rot = Mat4::identity();
            for (int i = 0; i < n; ++i) {
                geo = mat_mul(geo, geo_sub);
                rot = mat_mul(rot, rot_sub);
            }
            worst_geo = std::max(worst_geo,
                                 frobenius_norm(sub(geo, expm_i_hermitian(conn.a_full, pt.p.omega1 * pt.t))));
            worst_rot = std::max(worst_rot, frobenius_norm(sub(rot, expm_i_hermitian(hr, pt.t))));
        }
        // factored closed form equals the direct exponential route
        const GateResult g = gate(pt.p, pt.t, ops, ch);
        const Mat4 aform = mat_mul(mat_mul(mat_mul(ch.w, g.u_geometric), g.u_dynamic), adjoint(ch.w));
        const Mat4 direct = mat_mul(z_rotation(pt.t, pt.p, ops), expm_i_hermitian(hr, pt.t));
        worst_aform = std::max(worst_aform, frobenius_norm(sub(aform, direct)));
    }
    col.upper("compose.geometric_factor_substeps", worst_geo, 1e-11);
    col.upper("compose.rotating_frame_substeps", worst_rot, 1e-11);
    col.upper("compose.factored_equals_direct", worst_aform, 1e-11);
    return col.results;
}

std::vector<CheckResult> checks_adiabatic(const CheckOptions& opt)
{
    Collector col(opt);
    const SpinOps& ops = spin_ops();
    const Mat4 v = tilt_rotation(M_PI / 4.0, ops);

    auto offblock_at_period = [&](double ratio) {
        const ModelParams p{1.0, ratio, M_PI / 4.0};
        const double period = 2.0 * M_PI / p.omega1;
        const GateResult g = gate(p, period);
        return offblock_norm(mat_mul(mat_mul(adjoint(v), g.u_gate), v));
    };
    col.upper("adiabatic.slow_drive_offblock", offblock_at_period(1e-3), 1e-2);
    col.at_least("adiabatic.fast_drive_offblock", offblock_at_period(1.0), 0.05);
    return col.results;
}

std::vector<CheckResult> checks_mixing(const CheckOptions& opt)
{
    Collector col(opt);
    const ModelParams p{1.0, 1.0, M_PI / 4.0};
    const GateResult g = gate(p, 2.0 * M_PI);
    const MixingReport rep = characterize_gate(g);
    const int best = *std::max_element(rep.participation.begin(), rep.participation.end());
    col.at_least("mixing.max_column_participation", static_cast<double>(best), 2.0);

    const GateResult gid = gate(ModelParams{1.0, 0.6, 0.0}, 1.3);
    const MixingReport rid = characterize_gate(gid);
    col.upper("mixing.theta0_transfer_norm", rid.transfer_norm, 1e-12);
    return col.results;
}

std::vector<CheckResult> checks_integrator_order(const CheckOptions& opt)
{
    Collector col(opt);
    const SpinOps& ops = spin_ops();
    const ModelParams p{1.0, 0.7, 0.9};
    const double t = 2.0 * M_PI;
    const Mat4 ref = closed_form_lab(p, t, ops);

    const double scales[3] = {0.02, 0.01, 0.005};
    double lx[3], ly[3];
    for (int i = 0; i < 3; ++i) {
        IntegratorConfig cfg;
        cfg.step_scale = scales[i];
        const PropagationResult pr = integrate_lab(p, t, cfg);
        const double err = std::max(frobenius_norm(sub(pr.u_numeric, ref)), 1e-300);
        lx[i] = std::log(scales[i]);
        ly[i] = std::log(err);
    }
    // least-squares slope through the three points
    const double mx = (lx[0] + lx[1] + lx[2]) / 3.0, my = (ly[0] + ly[1] + ly[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;
    col.upper("integrator.order_slope_dev", std::abs(slope - 4.0), 0.5,
              "fitted slope " + format_double(slope));
    return col.results;
}

std::vector<CheckResult> checks_report_determinism(const CheckOptions& opt)
{
    Collector col(opt);
    const std::string a = errata_report();
    const std::string b = errata_report();
    col.upper("report.byte_identical_reruns", a == b ? 0.0 : 1.0, 0.0);

    std::size_t entries = 0;
    for (std::size_t pos = a.find("\n[E"); pos != std::string::npos; pos = a.find("\n[E", pos + 1))
        ++entries;
    col.upper("report.five_discrepancy_entries",
              std::abs(static_cast<double>(entries) - 5.0), 0.0);
    col.upper("report.has_delta_table",
              a.find("Literal vs derived connection coefficients") != std::string::npos ? 0.0 : 1.0, 0.0);
    return col.results;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& opt)
{
    std::vector<CheckResult> all;
    auto absorb = [&](std::vector<CheckResult> v) {
        for (auto& r : v) all.push_back(std::move(r));
    };
    absorb(checks_algebra(opt));
    absorb(checks_linalg(opt));
    absorb(checks_spin_model(opt));
    absorb(checks_diagonalization(opt));
    absorb(checks_connection(opt));
    absorb(checks_oracle(opt));
    absorb(checks_composition(opt));
    absorb(checks_adiabatic(opt));
    absorb(checks_mixing(opt));
    absorb(checks_integrator_order(opt));
    absorb(checks_report_determinism(opt));
    return all;
}

} // namespace hgate
