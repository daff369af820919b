// NEON variants, mirroring the scalar reference operation order.
#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace drp::kernels::detail {

void stencil_step_neon(double* out, const double* in, std::size_t n, double sigma,
                       const double* gamma, int m) {
    const std::size_t um = static_cast<std::size_t>(m);
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
    const std::size_t hi = n - um;
    const float64x2_t vsigma = vdupq_n_f64(sigma);
    std::size_t i = lo;
    for (; i + 2 <= hi; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (int k = 1; k <= m; ++k) {
            const float64x2_t g = vdupq_n_f64(gamma[k - 1]);
            const float64x2_t up = vld1q_f64(in + i + k);
            const float64x2_t dn = vld1q_f64(in + i - k);
            acc = vaddq_f64(acc, vmulq_f64(g, vsubq_f64(up, dn)));
        }
        const float64x2_t center = vld1q_f64(in + i);
        vst1q_f64(out + i, vsubq_f64(center, vmulq_f64(vsigma, acc)));
    }
    for (; i < hi; ++i) {
        double acc = 0.0;
        for (int k = 1; k <= m; ++k) acc += gamma[k - 1] * (in[i + k] - in[i - k]);
        out[i] = in[i] - sigma * acc;
    }
}

double max_abs_neon(const double* v, std::size_t n) {
    float64x2_t vbest = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vbest = vmaxq_f64(vbest, vabsq_f64(vld1q_f64(v + i)));
    double best = vgetq_lane_f64(vbest, 0);
    const double lane1 = vgetq_lane_f64(vbest, 1);
    if (lane1 > best) best = lane1;
    for (; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t vbest = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vbest = vmaxq_f64(vbest, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
    double best = vgetq_lane_f64(vbest, 0);
    const double lane1 = vgetq_lane_f64(vbest, 1);
    if (lane1 > best) best = lane1;
    for (; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > best) best = d;
    }
    return best;
}

void half_square_neon(double* out, const double* in, std::size_t n) {
    const float64x2_t half = vdupq_n_f64(0.5);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t v = vld1q_f64(in + i);
        vst1q_f64(out + i, vmulq_f64(half, vmulq_f64(v, v)));
    }
    for (; i < n; ++i) out[i] = 0.5 * in[i] * in[i];
}

}  // namespace drp::kernels::detail

#endif  // __aarch64__
