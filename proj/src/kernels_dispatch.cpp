#include "hgate/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hgate::kernels {

namespace {

bool cpu_has_avx2_fma() noexcept
{
#if HGATE_HAVE_AVX2_KERNELS && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa pick_isa() noexcept
{
    if (const char* env = std::getenv("HGATE_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2_fma()) return Isa::avx2;
        return Isa::scalar;
    }
    return cpu_has_avx2_fma() ? Isa::avx2 : Isa::scalar;
}

const Isa g_isa = pick_isa();

} // namespace

Isa active_isa() noexcept { return g_isa; }

bool isa_supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2_fma();
    }
    return false;
}

std::string isa_name(Isa isa)
{
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

#if HGATE_HAVE_AVX2_KERNELS
void (*mat_mul)(cd*, const cd*, const cd*) noexcept = g_isa == Isa::avx2 ? avx2::mat_mul : scalar::mat_mul;
void (*axpy)(cd*, cd, const cd*) noexcept = g_isa == Isa::avx2 ? avx2::axpy : scalar::axpy;
double (*fro_norm_sq)(const cd*) noexcept = g_isa == Isa::avx2 ? avx2::fro_norm_sq : scalar::fro_norm_sq;
#else
void (*mat_mul)(cd*, const cd*, const cd*) noexcept = scalar::mat_mul;
void (*axpy)(cd*, cd, const cd*) noexcept = scalar::axpy;
double (*fro_norm_sq)(const cd*) noexcept = scalar::fro_norm_sq;
#endif

} // namespace hgate::kernels
