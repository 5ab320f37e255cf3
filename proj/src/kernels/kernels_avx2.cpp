// AVX2+FMA lane. This translation unit is compiled with -mavx2 -mfma on
// x86-64; nothing here may run unless dispatch.cpp verified CPU support.

#include "pairgen/kernels/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace pairgen::kernels {
namespace {

// One __m256d holds two complex doubles as [re0, im0, re1, im1].
// Complex multiply by a scalar a: with ar/ai broadcast,
//   fmaddsub(ar, x, ai * swap(x)) = [ar*re - ai*im, ar*im + ai*re, ...]
inline __m256d cmul_pd(__m256d ar, __m256d ai, __m256d x) {
    const __m256d xs = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

void axpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul_pd(ar, ai, xv)));
    }
    if (i < n) {
        const double xr = xp[2 * i], xi = xp[2 * i + 1];
        yp[2 * i] += a.real() * xr - a.imag() * xi;
        yp[2 * i + 1] += a.real() * xi + a.imag() * xr;
    }
}

void scal_avx2(std::size_t n, cplx a, cplx* x) {
    double* xp = reinterpret_cast<double*>(x);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(xp + 2 * i, cmul_pd(ar, ai, xv));
    }
    if (i < n) {
        const double xr = xp[2 * i], xi = xp[2 * i + 1];
        xp[2 * i] = a.real() * xr - a.imag() * xi;
        xp[2 * i + 1] = a.real() * xi + a.imag() * xr;
    }
}

void add_scaled_avx2(std::size_t n, const cplx* x, cplx a, const cplx* y, cplx* out) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    double* op = reinterpret_cast<double*>(out);
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(op + 2 * i, _mm256_add_pd(xv, cmul_pd(ar, ai, yv)));
    }
    if (i < n) {
        const double yr = yp[2 * i], yi = yp[2 * i + 1];
        op[2 * i] = xp[2 * i] + (a.real() * yr - a.imag() * yi);
        op[2 * i + 1] = xp[2 * i + 1] + (a.real() * yi + a.imag() * yr);
    }
}

void rk4_update_avx2(std::size_t n, double h, const cplx* y0, const cplx* k1,
                     const cplx* k2, const cplx* k3, const cplx* k4, cplx* out) {
    const double* y0p = reinterpret_cast<const double*>(y0);
    const double* k1p = reinterpret_cast<const double*>(k1);
    const double* k2p = reinterpret_cast<const double*>(k2);
    const double* k3p = reinterpret_cast<const double*>(k3);
    const double* k4p = reinterpret_cast<const double*>(k4);
    double* op = reinterpret_cast<double*>(out);
    const std::size_t m = 2 * n;
    const __m256d c6 = _mm256_set1_pd(h / 6.0);
    const __m256d c3 = _mm256_set1_pd(h / 3.0);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d s14 = _mm256_add_pd(_mm256_loadu_pd(k1p + i), _mm256_loadu_pd(k4p + i));
        const __m256d s23 = _mm256_add_pd(_mm256_loadu_pd(k2p + i), _mm256_loadu_pd(k3p + i));
        __m256d r = _mm256_fmadd_pd(c6, s14, _mm256_loadu_pd(y0p + i));
        r = _mm256_fmadd_pd(c3, s23, r);
        _mm256_storeu_pd(op + i, r);
    }
    for (; i < m; ++i) {
        op[i] = y0p[i] + (h / 6.0) * (k1p[i] + k4p[i]) + (h / 3.0) * (k2p[i] + k3p[i]);
    }
}

inline double hsum_pd(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double norm_sq_avx2(std::size_t n, const cplx* x) {
    const double* xp = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d v = _mm256_loadu_pd(xp + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double total = hsum_pd(acc);
    for (; i < m; ++i) total += xp[i] * xp[i];
    return total;
}

double diff_norm_sq_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    const std::size_t m = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xp + i), _mm256_loadu_pd(yp + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double total = hsum_pd(acc);
    for (; i < m; ++i) {
        const double d = xp[i] - yp[i];
        total += d * d;
    }
    return total;
}

cplx dot_conj_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    // re: sum of lanes of x.*y; im: sum of (-1,+1) signed lanes of swap(x).*y
    const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        acc_im = _mm256_fmadd_pd(_mm256_mul_pd(xs, sign), yv, acc_im);
    }
    double re = hsum_pd(acc_re);
    double im = hsum_pd(acc_im);
    if (i < n) {
        const double xr = xp[2 * i], xi = xp[2 * i + 1];
        const double yr = yp[2 * i], yi = yp[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

}  // namespace

namespace detail {

const Ops& avx2_table() {
    static const Ops ops = {
        "avx2",          axpy_avx2,    scal_avx2,     add_scaled_avx2,
        rk4_update_avx2, norm_sq_avx2, diff_norm_sq_avx2, dot_conj_avx2,
        scalar_ops().adjoint,  // transpose is gather-bound; the blocked scalar is shared
    };
    return ops;
}

}  // namespace detail
}  // namespace pairgen::kernels

#endif  // __x86_64__
