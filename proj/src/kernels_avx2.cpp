#include "hgate/kernels.hpp"

#if HGATE_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Complex arithmetic on __m256d vectors holding two complex<double> values
// as [re0, im0, re1, im1]. A complex product a*b is formed with one permute,
// one multiply and one fmaddsub:
//   [ar*br - ai*bi, ar*bi + ai*br]

namespace hgate::kernels::avx2 {

namespace {

// acc += a * b  where a is one complex scalar splat across the lane pair
inline __m256d cplx_fma(__m256d acc, double ar, double ai, __m256d b) noexcept
{
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    const __m256d bswap = _mm256_permute_pd(b, 0x5); // [im0, re0, im1, re1]
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(var, b, _mm256_mul_pd(vai, bswap)));
}

} // namespace

void mat_mul(cd* c, const cd* a, const cd* b) noexcept
{
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    double* cdp = reinterpret_cast<double*>(c);

    __m256d brow[8];
    for (int k = 0; k < 4; ++k) {
        brow[2 * k] = _mm256_loadu_pd(bd + 8 * k);
        brow[2 * k + 1] = _mm256_loadu_pd(bd + 8 * k + 4);
    }
    for (int i = 0; i < 4; ++i) {
        __m256d lo = _mm256_setzero_pd();
        __m256d hi = _mm256_setzero_pd();
        for (int k = 0; k < 4; ++k) {
            const double ar = ad[8 * i + 2 * k];
            const double ai = ad[8 * i + 2 * k + 1];
            lo = cplx_fma(lo, ar, ai, brow[2 * k]);
            hi = cplx_fma(hi, ar, ai, brow[2 * k + 1]);
        }
        _mm256_storeu_pd(cdp + 8 * i, lo);
        _mm256_storeu_pd(cdp + 8 * i + 4, hi);
    }
}

void axpy(cd* y, cd alpha, const cd* x) noexcept
{
    const double ar = alpha.real();
    const double ai = alpha.imag();
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    for (int i = 0; i < 8; ++i) {
        const __m256d xv = _mm256_loadu_pd(xd + 4 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 4 * i);
        _mm256_storeu_pd(yd + 4 * i, cplx_fma(yv, ar, ai, xv));
    }
}

double fro_norm_sq(const cd* a) noexcept
{
    const double* ad = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    for (int i = 0; i < 8; ++i) {
        const __m256d v = _mm256_loadu_pd(ad + 4 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_pd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace hgate::kernels::avx2

#endif // HGATE_HAVE_AVX2_KERNELS
