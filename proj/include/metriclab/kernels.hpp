/// @file kernels.hpp
/// @brief Data-parallel inner loops behind the field and potential operators.
///
/// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
/// variant. The backend is picked once at startup from CPUID and can be forced
/// (e.g. --kernels=scalar) for equivalence testing. Reductions use a fixed
/// 1024-element blocking with a pairwise combine so that results are
/// reproducible and accurate to ~1e-14 relative regardless of backend.
#pragma once

#include <cstddef>
#include <string>

namespace metriclab::kernels {

enum class Backend { scalar, avx2 };

/// Table of function pointers bound to one backend.
struct Ops {
    /// sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// sum_i a[i]
    double (*sum)(const double* a, std::size_t n);
    /// out[i] = c * f[i]^2            (pointwise Frobenius norm of f^2 g0)
    void (*scale_square)(const double* f, double c, double* out, std::size_t n);
    /// out[i] = c * |f[i]^2 - 1|      (pointwise norm of (f^2 - 1) g0)
    void (*scale_square_minus_one)(const double* f, double c, double* out, std::size_t n);
    /// max_i a[i]
    double (*max)(const double* a, std::size_t n);
};

Backend active_backend();
const char* backend_name(Backend b);

/// Force a backend. Throws std::invalid_argument if it is not compiled in or
/// the CPU lacks the required ISA.
void set_backend(Backend b);
bool backend_available(Backend b);

const Ops& ops();

/// Reference implementations (always available; used by equivalence tests).
extern const Ops scalar_ops;
#if defined(METRICLAB_KERNELS_AVX2)
extern const Ops avx2_ops;
#endif

inline double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
inline double sum(const double* a, std::size_t n) { return ops().sum(a, n); }
inline double max(const double* a, std::size_t n) { return ops().max(a, n); }
inline void scale_square(const double* f, double c, double* out, std::size_t n) {
    ops().scale_square(f, c, out, n);
}
inline void scale_square_minus_one(const double* f, double c, double* out, std::size_t n) {
    ops().scale_square_minus_one(f, c, out, n);
}

} // namespace metriclab::kernels
