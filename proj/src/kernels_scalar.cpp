#include "hgate/kernels.hpp"

namespace hgate::kernels::scalar {

void mat_mul(cd* c, const cd* a, const cd* b) noexcept
{
    for (int i = 0; i < 4; ++i) {
        const cd a0 = a[4 * i + 0];
        const cd a1 = a[4 * i + 1];
        const cd a2 = a[4 * i + 2];
        const cd a3 = a[4 * i + 3];
        for (int j = 0; j < 4; ++j) {
            c[4 * i + j] = a0 * b[0 + j] + a1 * b[4 + j] + a2 * b[8 + j] + a3 * b[12 + j];
        }
    }
}

void axpy(cd* y, cd alpha, const cd* x) noexcept
{
    for (int i = 0; i < 16; ++i) y[i] += alpha * x[i];
}

double fro_norm_sq(const cd* a) noexcept
{
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

} // namespace hgate::kernels::scalar
