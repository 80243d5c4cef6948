#pragma once

#include <complex>
#include <string>

// Arithmetic kernels for the fixed 4x4 complex matrices that everything in
// this engine is built from. Each kernel exists as a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant. The active variant is
// picked once at startup from CPUID; HGATE_ISA=scalar|avx2 in the
// environment overrides the choice (used by the equivalence tests).
//
// Arrays are 16 std::complex<double> in row-major order, i.e. 32 doubles
// with re/im interleaved.

namespace hgate::kernels {

using cd = std::complex<double>;

namespace scalar {
void mat_mul(cd* c, const cd* a, const cd* b) noexcept;   // c = a * b, c distinct from a,b
void axpy(cd* y, cd alpha, const cd* x) noexcept;         // y += alpha * x
double fro_norm_sq(const cd* a) noexcept;                 // sum |a_ij|^2
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HGATE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void mat_mul(cd* c, const cd* a, const cd* b) noexcept;
void axpy(cd* y, cd alpha, const cd* x) noexcept;
double fro_norm_sq(const cd* a) noexcept;
} // namespace avx2
#else
#define HGATE_HAVE_AVX2_KERNELS 0
#endif

enum class Isa { scalar, avx2 };

Isa active_isa() noexcept;
bool isa_supported(Isa isa) noexcept;   // compiled in AND usable on this CPU
std::string isa_name(Isa isa);

// Dispatched entry points (bound to the active ISA at startup).
extern void (*mat_mul)(cd*, const cd*, const cd*) noexcept;
extern void (*axpy)(cd*, cd, const cd*) noexcept;
extern double (*fro_norm_sq)(const cd*) noexcept;

} // namespace hgate::kernels
