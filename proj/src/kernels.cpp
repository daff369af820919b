#include "drp/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace drp::kernels {

namespace detail {

void stencil_step_scalar(double* out, const double* in, std::size_t n, double sigma,
                         const double* gamma, int m) {
    const std::size_t um = static_cast<std::size_t>(m);
    // wrapped edges
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= um && i + um < n) continue;
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) {
            const std::size_t ip = (i + k) % n;
            const std::size_t im = (i + n - k) % n;
            acc += gamma[k - 1] * (in[ip] - in[im]);
        }
        out[i] = in[i] - sigma * acc;
    }
    // interior
    for (std::size_t i = um; i + um < n; ++i) {
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += gamma[k - 1] * (in[i + k] - in[i - k]);
        out[i] = in[i] - sigma * acc;
    }
}

double max_abs_scalar(const double* v, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > best) best = d;
    }
    return best;
}

void half_square_scalar(double* out, const double* in, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * in[i] * in[i];
}

#if defined(__x86_64__)
void stencil_step_avx2(double* out, const double* in, std::size_t n, double sigma,
                       const double* gamma, int m);
double max_abs_avx2(const double* v, std::size_t n);
double max_abs_diff_avx2(const double* a, const double* b, std::size_t n);
void half_square_avx2(double* out, const double* in, std::size_t n);
#endif
#if defined(__aarch64__)
void stencil_step_neon(double* out, const double* in, std::size_t n, double sigma,
                       const double* gamma, int m);
double max_abs_neon(const double* v, std::size_t n);
double max_abs_diff_neon(const double* a, const double* b, std::size_t n);
void half_square_neon(double* out, const double* in, std::size_t n);
#endif

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(__x86_64__)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend detect_backend() {
    if (backend_available(Backend::Avx2)) return Backend::Avx2;
    if (backend_available(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Backend& current() {
    static Backend b = detect_backend();
    return b;
}

}  // namespace detail

Backend active_backend() { return detail::current(); }

std::string backend_label(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

void force_backend(Backend b) {
    if (!detail::backend_available(b))
        throw std::invalid_argument("kernels: backend " + backend_label(b) +
                                    " unavailable on this CPU");
    detail::current() = b;
}

void stencil_step(double* out, const double* in, std::size_t n, double sigma, const double* gamma,
                  int m) {
    if (n <= 2 * static_cast<std::size_t>(m))
        throw std::invalid_argument("stencil_step: need n > 2m");
    switch (detail::current()) {
#if defined(__x86_64__)
        case Backend::Avx2:
            detail::stencil_step_avx2(out, in, n, sigma, gamma, m);
            return;
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            detail::stencil_step_neon(out, in, n, sigma, gamma, m);
            return;
#endif
        default:
            detail::stencil_step_scalar(out, in, n, sigma, gamma, m);
            return;
    }
}

double max_abs(const double* v, std::size_t n) {
    switch (detail::current()) {
#if defined(__x86_64__)
        case Backend::Avx2:
            return detail::max_abs_avx2(v, n);
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            return detail::max_abs_neon(v, n);
#endif
        default:
            return detail::max_abs_scalar(v, n);
    }
}

double max_abs_diff(const double* a, const double* b, std::size_t n) {
    switch (detail::current()) {
#if defined(__x86_64__)
        case Backend::Avx2:
            return detail::max_abs_diff_avx2(a, b, n);
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            return detail::max_abs_diff_neon(a, b, n);
#endif
        default:
            return detail::max_abs_diff_scalar(a, b, n);
    }
}

void half_square(double* out, const double* in, std::size_t n) {
    switch (detail::current()) {
#if defined(__x86_64__)
        case Backend::Avx2:
            detail::half_square_avx2(out, in, n);
            return;
#endif
#if defined(__aarch64__)
        case Backend::Neon:
            detail::half_square_neon(out, in, n);
            return;
#endif
        default:
            detail::half_square_scalar(out, in, n);
            return;
    }
}

}  // namespace drp::kernels
