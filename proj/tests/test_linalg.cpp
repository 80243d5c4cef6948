#include <doctest.h>

#include "hgate/checks.hpp"
#include "hgate/holonomy.hpp"
#include "hgate/linalg.hpp"

#include <cmath>

using namespace hgate;

namespace {

Mat4 random_hermitian(CheckRng& rng, double scale = 1.0)
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

} // namespace

TEST_CASE("mat_mul basics")
{
    const SpinOps& ops = spin_ops();
    CHECK(mat_mul(Mat4::identity(), ops.j1) == ops.j1);
    CHECK(frobenius_norm(sub(mat_mul(ops.j3, ops.j3), Mat4::diag(2.25, 2.25, 0.25, 0.25))) == 0.0);

    const Mat4 u = expm_i_hermitian(ops.j2, 0.7);
    CHECK(frobenius_norm(sub(mat_mul(u, adjoint(u)), Mat4::identity())) < 1e-14);
}

TEST_CASE("adjoint")
{
    CHECK(adjoint(Mat4::identity()) == Mat4::identity());
    CheckRng rng(3);
    const Mat4 m = random_hermitian(rng, 2.0);
    CHECK(adjoint(adjoint(m)) == m);

    const Mat4 i_id = scaled(Mat4::identity(), Complex(0, 1));
    CHECK(frobenius_norm(add(adjoint(i_id), i_id)) == 0.0); // adjoint(iI) = -iI
}

TEST_CASE("frobenius_norm")
{
    CHECK(frobenius_norm(Mat4::zero()) == 0.0);
    CHECK(frobenius_norm(Mat4::identity()) == doctest::Approx(2.0));
    CHECK(frobenius_norm(spin_ops().j3) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("hermitian_eig: diagonal input and ordering")
{
    const EigResult e = hermitian_eig(Mat4::diag(1.5, -1.5, 0.5, -0.5));
    CHECK(e.values[0] == doctest::Approx(-1.5));
    CHECK(e.values[1] == doctest::Approx(-0.5));
    CHECK(e.values[2] == doctest::Approx(0.5));
    CHECK(e.values[3] == doctest::Approx(1.5));
}

TEST_CASE("hermitian_eig: quadrupole spectrum is +-1 twice")
{
    const ModelParams p{1.0, 0.0, 0.0};
    const EigResult e = hermitian_eig(h0(p, spin_ops()));
    CHECK(e.values[0] == doctest::Approx(-1.0));
    CHECK(e.values[1] == doctest::Approx(-1.0));
    CHECK(e.values[2] == doctest::Approx(1.0));
    CHECK(e.values[3] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality over random matrices")
{
    CheckRng rng(11);
    double worst_rec = 0.0, worst_orth = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Mat4 a = random_hermitian(rng, rng.log_uniform(1e-3, 1e3));
        const EigResult e = hermitian_eig(a);
        const Mat4 rec = mat_mul(mat_mul(e.vectors, Mat4::diag(e.values)), adjoint(e.vectors));
        worst_rec = std::max(worst_rec, frobenius_norm(sub(rec, a)) / std::max(frobenius_norm(a), 1e-300));
        worst_orth = std::max(worst_orth,
                              frobenius_norm(sub(mat_mul(adjoint(e.vectors), e.vectors), Mat4::identity())));
    }
    CHECK(worst_rec < 1e-12);
    CHECK(worst_orth < 1e-12);
}

TEST_CASE("hermitian_eig: deterministic output for repeated calls")
{
    CheckRng rng(12);
    const Mat4 a = random_hermitian(rng, 3.0);
    const EigResult e1 = hermitian_eig(a);
    const EigResult e2 = hermitian_eig(a);
    CHECK(e1.vectors == e2.vectors);
    CHECK(e1.values == e2.values);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input")
{
    Mat4 bad;
    bad(0, 1) = 1.0; // bad(1,0) stays 0
    CHECK_THROWS_AS(hermitian_eig(bad), NotHermitianError);
}

TEST_CASE("expm_i_hermitian basics")
{
    CheckRng rng(13);
    const Mat4 h = random_hermitian(rng, 2.0);
    CHECK(frobenius_norm(sub(expm_i_hermitian(h, 0.0), Mat4::identity())) < 1e-14);

    // half-integer spin: a full turn is -1
    CHECK(frobenius_norm(add(expm_i_hermitian(spin_ops().j3, 2.0 * M_PI), Mat4::identity())) < 1e-13);

    const Mat4 u = expm_i_hermitian(h, 1.7);
    CHECK(frobenius_norm(sub(mat_mul(adjoint(u), u), Mat4::identity())) < 1e-12);
}

TEST_CASE("expm_i_hermitian one-parameter group law")
{
    CheckRng rng(14);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Mat4 h = random_hermitian(rng, 2.0);
        const double s = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
        worst = std::max(worst, frobenius_norm(sub(expm_i_hermitian(h, s + t),
                                                   mat_mul(expm_i_hermitian(h, s), expm_i_hermitian(h, t)))));
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("predicates")
{
    CheckRng rng(15);
    const Mat4 h = random_hermitian(rng, 1.0);
    CHECK(is_hermitian(h, 1e-12));
    CHECK(!is_hermitian(scaled(spin_ops().j3, Complex(0, 1)), 1e-10));
    CHECK(is_unitary(expm_i_hermitian(h, 0.3), 1e-12));
    CHECK(is_diagonal(Mat4::diag(1, 2, 3, 4), 1e-14));
    CHECK(!is_diagonal(spin_ops().j1, 1e-10));
}

TEST_CASE("trace_fidelity is 1 exactly up to global phase")
{
    CheckRng rng(16);
    const Mat4 u = expm_i_hermitian(random_hermitian(rng, 1.0), 0.9);
    CHECK(trace_fidelity(u, u) == doctest::Approx(1.0));
    const Mat4 up = scaled(u, std::polar(1.0, 1.234));
    CHECK(trace_fidelity(u, up) == doctest::Approx(1.0));
    CHECK(trace_fidelity(u, Mat4::identity()) < 1.0);
}
