#include "hgate/linalg.hpp"

#include "hgate/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hgate {

Mat4 mat_mul(const Mat4& a, const Mat4& b)
{
    Mat4 c;
    kernels::mat_mul(c.data(), a.data(), b.data());
    return c;
}

Mat4 adjoint(const Mat4& a)
{
    Mat4 c;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col)
            c(r, col) = std::conj(a(col, r));
    return c;
}

Mat4 add(const Mat4& a, const Mat4& b)
{
    Mat4 c = a;
    kernels::axpy(c.data(), 1.0, b.data());
    return c;
}

Mat4 sub(const Mat4& a, const Mat4& b)
{
    Mat4 c = a;
    kernels::axpy(c.data(), -1.0, b.data());
    return c;
}

Mat4 scaled(const Mat4& a, Complex alpha)
{
    Mat4 c;
    kernels::axpy(c.data(), alpha, a.data());
    return c;
}

Complex trace(const Mat4& a)
{
    return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

double frobenius_norm(const Mat4& a)
{
    return std::sqrt(kernels::fro_norm_sq(a.data()));
}

bool all_finite(const Mat4& a)
{
    for (const auto& z : a.e)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

bool is_hermitian(const Mat4& a, double tol)
{
    const double scale = std::max(1.0, frobenius_norm(a));
    return frobenius_norm(sub(a, adjoint(a))) <= tol * scale;
}

bool is_unitary(const Mat4& a, double tol)
{
    return frobenius_norm(sub(mat_mul(adjoint(a), a), Mat4::identity())) <= tol * 2.0;
}

bool is_diagonal(const Mat4& a, double tol)
{
    const double scale = std::max(1.0, frobenius_norm(a));
    return offdiag_norm(a) <= tol * scale;
}

double offdiag_norm(const Mat4& a)
{
    double s = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

double trace_fidelity(const Mat4& a, const Mat4& b)
{
    return std::abs(trace(mat_mul(adjoint(a), b))) / 4.0;
}

namespace {

// One complex Jacobi rotation zeroing a(p,q). The rotation carries the phase
// of the off-diagonal element so the 2x2 subproblem reduces to the real case.
void jacobi_rotate(Mat4& a, Mat4& v, int p, int q)
{
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r < 1e-300) return;

    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // G = I except G(p,p)=c, G(p,q)=s*phase, G(q,p)=-s*conj(phase), G(q,q)=c
    // apply a <- G^dag a G, v <- v G
    for (int i = 0; i < 4; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
    }
    for (int i = 0; i < 4; ++i) {
        const Complex api = a(p, i);
        const Complex aqi = a(q, i);
        a(p, i) = c * api - s * phase * aqi;
        a(q, i) = s * std::conj(phase) * api + c * aqi;
    }
    for (int i = 0; i < 4; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

int first_nonzero_row(const Mat4& v, int col)
{
    for (int r = 0; r < 4; ++r)
        if (std::abs(v(r, col)) > 1e-12) return r;
    return 0;
}

} // namespace

EigResult hermitian_eig(const Mat4& a, double input_tol)
{
    if (!all_finite(a)) throw NotHermitianError("hermitian_eig: non-finite entries");
    if (!is_hermitian(a, input_tol)) throw NotHermitianError("hermitian_eig: input is not Hermitian within tolerance");

    // symmetrize so roundoff asymmetry cannot leak into the iteration
    Mat4 w = scaled(add(a, adjoint(a)), 0.5);
    Mat4 v = Mat4::identity();

    const double total = std::max(frobenius_norm(w), 1e-300);
    for (int sweep = 0; sweep < 64; ++sweep) {
        if (offdiag_norm(w) <= 1e-16 * total) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q)
                jacobi_rotate(w, v, p, q);
    }

    EigResult res;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> lam;
    for (int i = 0; i < 4; ++i) lam[i] = w(i, i).real();
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (lam[i] != lam[j]) return lam[i] < lam[j];
        const int ri = first_nonzero_row(v, i);
        const int rj = first_nonzero_row(v, j);
        return std::abs(v(ri, i)) > std::abs(v(rj, j));
    });
    for (int i = 0; i < 4; ++i) {
        res.values[i] = lam[order[i]];
        // phase-normalize: largest-magnitude component real positive
        int big = 0;
        double bigmag = -1.0;
        for (int r = 0; r < 4; ++r) {
            const double m = std::abs(v(r, order[i]));
            if (m > bigmag + 1e-15) { bigmag = m; big = r; }
        }
        Complex ph = v(big, order[i]);
        ph = (std::abs(ph) > 0.0) ? std::conj(ph) / std::abs(ph) : Complex(1.0);
        for (int r = 0; r < 4; ++r) res.vectors(r, i) = v(r, order[i]) * ph;
    }
    return res;
}

Mat4 expm_i_hermitian(const Mat4& h, double t, double input_tol)
{
    const EigResult eig = hermitian_eig(h, input_tol);
    Mat4 d;
    for (int i = 0; i < 4; ++i) d(i, i) = std::polar(1.0, -eig.values[i] * t);
    return mat_mul(mat_mul(eig.vectors, d), adjoint(eig.vectors));
}

} // namespace hgate
