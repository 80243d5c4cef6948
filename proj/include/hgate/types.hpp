#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace hgate {

using Complex = std::complex<double>;

/// Dense 4x4 complex matrix, row-major.
///
/// The basis ordering is fixed globally for the whole engine:
///   index 0 -> |3/2>,  1 -> |-3/2>,  2 -> |1/2>,  3 -> |-1/2>
/// i.e. the two m = +-3/2 states first, then the two m = +-1/2 states.
/// Every module shares this convention; do not reorder.
struct Mat4 {
    std::array<Complex, 16> e{};

    Complex& operator()(int r, int c) { return e[4 * r + c]; }
    const Complex& operator()(int r, int c) const { return e[4 * r + c]; }

    Complex* data() noexcept { return e.data(); }
    const Complex* data() const noexcept { return e.data(); }

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity()
    {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat4 diag(double d0, double d1, double d2, double d3)
    {
        Mat4 m;
        m(0, 0) = d0; m(1, 1) = d1; m(2, 2) = d2; m(3, 3) = d3;
        return m;
    }
    static Mat4 diag(const std::array<double, 4>& d)
    {
        return diag(d[0], d[1], d[2], d[3]);
    }

    bool operator==(const Mat4&) const = default;
};

/// Central tolerance configuration. Inputs are validated against the looser
/// bound, produced results against the tighter one.
struct Tolerances {
    double input_hermitian = 1e-10;
    double input_unitary = 1e-10;
    double output_unitary = 1e-12;
    double output_reconstruction = 1e-12;
};

inline const Tolerances& default_tolerances()
{
    static const Tolerances tol{};
    return tol;
}

struct NotHermitianError : std::runtime_error {
    explicit NotHermitianError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCouplingError : std::runtime_error {
    explicit DegenerateCouplingError(const std::string& what) : std::runtime_error(what) {}
};

struct UnitarityViolationError : std::runtime_error {
    explicit UnitarityViolationError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct StepBudgetExceededError : std::runtime_error {
    explicit StepBudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hgate
