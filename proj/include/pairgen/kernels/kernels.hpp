#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Complex double-precision kernels behind the linear-algebra core.
//
// Every kernel exists as a scalar reference implementation and, on x86-64
// hardware with AVX2+FMA, as a vectorized variant. The active table is
// selected once at startup (overridable with PAIRGEN_KERNELS=scalar|avx2|auto
// or force_backend()) and the two lanes are equivalence-tested against each
// other. Vectorized reductions may reassociate sums, so comparisons between
// lanes are tolerance-based, not bitwise.

namespace pairgen::kernels {

using cplx = std::complex<double>;

struct Ops {
    const char* name;

    // y += a * x
    void (*axpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
    // x *= a
    void (*scal)(std::size_t n, cplx a, cplx* x);
    // out = x + a * y
    void (*add_scaled)(std::size_t n, const cplx* x, cplx a, const cplx* y, cplx* out);
    // out = y0 + h/6 k1 + h/3 k2 + h/3 k3 + h/6 k4  (classic RK4 combine)
    void (*rk4_update)(std::size_t n, double h, const cplx* y0, const cplx* k1,
                       const cplx* k2, const cplx* k3, const cplx* k4, cplx* out);
    // sum |x_i|^2
    double (*norm_sq)(std::size_t n, const cplx* x);
    // sum |x_i - y_i|^2
    double (*diff_norm_sq)(std::size_t n, const cplx* x, const cplx* y);
    // sum conj(x_i) y_i
    cplx (*dot_conj)(std::size_t n, const cplx* x, const cplx* y);
    // out = a^H for a d x d row-major matrix; out must not alias a
    void (*adjoint)(std::size_t d, const cplx* a, cplx* out);
};

enum class Backend { scalar, avx2 };

const Ops& scalar_ops();

// Null when this build or this CPU cannot run the AVX2 lane.
const Ops* avx2_ops_or_null();

// Table selected by PAIRGEN_KERNELS / CPU detection; cached after first use.
const Ops& active();

// Test hook. Throws pairgen::validation_error if the backend is unsupported.
void force_backend(Backend b);

// Every lane runnable on this machine (scalar first).
std::vector<const Ops*> available_backends();

}  // namespace pairgen::kernels
