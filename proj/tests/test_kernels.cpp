#include <doctest.h>

#include "hgate/checks.hpp"
#include "hgate/kernels.hpp"
#include "hgate/linalg.hpp"
#include "hgate/types.hpp"

#include <cmath>

using namespace hgate;

namespace {

Mat4 random_mat(CheckRng& rng)
{
    Mat4 m;
    for (auto& z : m.e) z = Complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    return m;
}

} // namespace

TEST_CASE("scalar mat_mul semantics")
{
    CheckRng rng(7);
    const Mat4 m = random_mat(rng);
    Mat4 out;
    kernels::scalar::mat_mul(out.data(), Mat4::identity().data(), m.data());
    CHECK(out == m);

    // hand-checked product: diag * diag
    const Mat4 j3 = Mat4::diag(1.5, -1.5, 0.5, -0.5);
    kernels::scalar::mat_mul(out.data(), j3.data(), j3.data());
    CHECK(out == Mat4::diag(2.25, 2.25, 0.25, 0.25));
}

TEST_CASE("scalar axpy and fro_norm_sq")
{
    CheckRng rng(8);
    const Mat4 x = random_mat(rng);
    Mat4 y = random_mat(rng);
    const Mat4 y0 = y;
    const Complex alpha(1.25, -0.5);
    kernels::scalar::axpy(y.data(), alpha, x.data());
    for (int i = 0; i < 16; ++i)
        CHECK(std::abs(y.e[i] - (y0.e[i] + alpha * x.e[i])) < 1e-15);

    CHECK(kernels::scalar::fro_norm_sq(Mat4::identity().data()) == doctest::Approx(4.0));
    CHECK(kernels::scalar::fro_norm_sq(Mat4::zero().data()) == 0.0);
}

TEST_CASE("simd variants agree with the scalar reference")
{
    if (!kernels::isa_supported(kernels::Isa::avx2)) {
        MESSAGE("avx2 not available on this host; dispatch is scalar-only");
        CHECK(kernels::active_isa() == kernels::Isa::scalar);
        return;
    }
#if HGATE_HAVE_AVX2_KERNELS
    CheckRng rng(9);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Mat4 a = random_mat(rng);
        const Mat4 b = random_mat(rng);
        Mat4 cs, cv;
        kernels::scalar::mat_mul(cs.data(), a.data(), b.data());
        kernels::avx2::mat_mul(cv.data(), a.data(), b.data());
        worst = std::max(worst, frobenius_norm(sub(cs, cv)) / std::max(1.0, frobenius_norm(cs)));

        Mat4 ys = a, yv = a;
        const Complex alpha(rng.uniform(-3, 3), rng.uniform(-3, 3));
        kernels::scalar::axpy(ys.data(), alpha, b.data());
        kernels::avx2::axpy(yv.data(), alpha, b.data());
        worst = std::max(worst, frobenius_norm(sub(ys, yv)) / std::max(1.0, frobenius_norm(ys)));

        const double fs = kernels::scalar::fro_norm_sq(a.data());
        const double fv = kernels::avx2::fro_norm_sq(a.data());
        worst = std::max(worst, std::abs(fs - fv) / fs);
    }
    // fma changes rounding, so agreement is to a few ulp, not bitwise
    CHECK(worst < 2e-15);
#endif
}

TEST_CASE("dispatched entry points are bound")
{
    CheckRng rng(10);
    const Mat4 a = random_mat(rng);
    const Mat4 b = random_mat(rng);
    Mat4 via_dispatch, via_scalar;
    kernels::mat_mul(via_dispatch.data(), a.data(), b.data());
    kernels::scalar::mat_mul(via_scalar.data(), a.data(), b.data());
    CHECK(frobenius_norm(sub(via_dispatch, via_scalar)) < 1e-13);
    CHECK(kernels::isa_supported(kernels::active_isa()));
}
