#include "pairgen/kernels/kernels.hpp"

// Reference lane. Complex products are written out on the real/imaginary
// parts so the scalar and vector lanes compute the same expressions.

namespace pairgen::kernels {
namespace {

inline void cmul_acc(double ar, double ai, double xr, double xi, double& yr, double& yi) {
    yr += ar * xr - ai * xi;
    yi += ar * xi + ai * xr;
}

void axpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
    const double ar = a.real(), ai = a.imag();
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        cmul_acc(ar, ai, xp[2 * i], xp[2 * i + 1], yp[2 * i], yp[2 * i + 1]);
    }
}

void scal_scalar(std::size_t n, cplx a, cplx* x) {
    const double ar = a.real(), ai = a.imag();
    double* xp = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = xp[2 * i], xi = xp[2 * i + 1];
        xp[2 * i] = ar * xr - ai * xi;
        xp[2 * i + 1] = ar * xi + ai * xr;
    }
}

void add_scaled_scalar(std::size_t n, const cplx* x, cplx a, const cplx* y, cplx* out) {
    const double ar = a.real(), ai = a.imag();
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    double* op = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        const double yr = yp[2 * i], yi = yp[2 * i + 1];
        op[2 * i] = xp[2 * i] + (ar * yr - ai * yi);
        op[2 * i + 1] = xp[2 * i + 1] + (ar * yi + ai * yr);
    }
}

void rk4_update_scalar(std::size_t n, double h, const cplx* y0, const cplx* k1,
                       const cplx* k2, const cplx* k3, const cplx* k4, cplx* out) {
    const double c6 = h / 6.0, c3 = h / 3.0;
    const double* y0p = reinterpret_cast<const double*>(y0);
    const double* k1p = reinterpret_cast<const double*>(k1);
    const double* k2p = reinterpret_cast<const double*>(k2);
    const double* k3p = reinterpret_cast<const double*>(k3);
    const double* k4p = reinterpret_cast<const double*>(k4);
    double* op = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        op[i] = y0p[i] + c6 * (k1p[i] + k4p[i]) + c3 * (k2p[i] + k3p[i]);
    }
}

double norm_sq_scalar(std::size_t n, const cplx* x) {
    const double* xp = reinterpret_cast<const double*>(x);
    double acc = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) acc += xp[i] * xp[i];
    return acc;
}

double diff_norm_sq_scalar(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    double acc = 0.0;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        const double d = xp[i] - yp[i];
        acc += d * d;
    }
    return acc;
}

cplx dot_conj_scalar(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = xp[2 * i], xi = xp[2 * i + 1];
        const double yr = yp[2 * i], yi = yp[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void adjoint_scalar(std::size_t d, const cplx* a, cplx* out) {
    constexpr std::size_t kBlock = 32;  // cache blocking for the strided side
    for (std::size_t ib = 0; ib < d; ib += kBlock) {
        const std::size_t imax = std::min(d, ib + kBlock);
        for (std::size_t jb = 0; jb < d; jb += kBlock) {
            const std::size_t jmax = std::min(d, jb + kBlock);
            for (std::size_t i = ib; i < imax; ++i) {
                for (std::size_t j = jb; j < jmax; ++j) {
                    out[j * d + i] = std::conj(a[i * d + j]);
                }
            }
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",         axpy_scalar,    scal_scalar,     add_scaled_scalar,
        rk4_update_scalar, norm_sq_scalar, diff_norm_sq_scalar, dot_conj_scalar,
        adjoint_scalar,
    };
    return ops;
}

}  // namespace pairgen::kernels
