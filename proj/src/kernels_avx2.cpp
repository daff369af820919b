// AVX2 variants. Operation order matches the scalar reference per element
// and FMA contraction is disabled project-wide (-ffp-contract=off), so
// results are bit-identical to the scalar kernels.
#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace drp::kernels::detail {

void stencil_step_avx2(double* out, const double* in, std::size_t n, double sigma,
                       const double* gamma, int m) {
    const std::size_t um = static_cast<std::size_t>(m);
    // wrapped edges, scalar
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
    if (n < um + um) return;
    const std::size_t lo = um;
    const std::size_t hi = n - um;  // exclusive
    const __m256d vsigma = _mm256_set1_pd(sigma);
    std::size_t i = lo;
    for (; i + 4 <= hi; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (int k = 1; k <= m; ++k) {
            const __m256d g = _mm256_set1_pd(gamma[k - 1]);
            const __m256d up = _mm256_loadu_pd(in + i + k);
            const __m256d dn = _mm256_loadu_pd(in + i - k);
            acc = _mm256_add_pd(acc, _mm256_mul_pd(g, _mm256_sub_pd(up, dn)));
        }
        const __m256d center = _mm256_loadu_pd(in + i);
        _mm256_storeu_pd(out + i, _mm256_sub_pd(center, _mm256_mul_pd(vsigma, acc)));
    }
    for (; i < hi; ++i) {
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += gamma[k - 1] * (in[i + k] - in[i - k]);
        out[i] = in[i] - sigma * acc;
    }
}

double max_abs_avx2(const double* v, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d vbest = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_andnot_pd(signmask, _mm256_loadu_pd(v + i));
        vbest = _mm256_max_pd(vbest, a);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vbest);
    double best = lanes[0];
    for (int l = 1; l < 4; ++l)
        if (lanes[l] > best) best = lanes[l];
    for (; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d vbest = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        vbest = _mm256_max_pd(vbest, _mm256_andnot_pd(signmask, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vbest);
    double best = lanes[0];
    for (int l = 1; l < 4; ++l)
        if (lanes[l] > best) best = lanes[l];
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > best) best = d;
    }
    return best;
}

void half_square_avx2(double* out, const double* in, std::size_t n) {
    const __m256d half = _mm256_set1_pd(0.5);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(in + i);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(half, _mm256_mul_pd(v, v)));
    }
    for (; i < n; ++i) out[i] = 0.5 * in[i] * in[i];
}

}  // namespace drp::kernels::detail

#endif  // __x86_64__
