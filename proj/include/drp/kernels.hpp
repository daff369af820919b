#pragma once

#include <cstddef>
#include <string>

namespace drp::kernels {

enum class Backend { Scalar, Avx2, Neon };

// Backend picked at startup from CPU capabilities.
Backend active_backend();
std::string backend_label(Backend b);

// Override the dispatch (tests compare variants against the scalar
// reference). Throws std::invalid_argument if the backend is unavailable
// on this CPU.
void force_backend(Backend b);

// Periodic antisymmetric stencil update:
//   out[i] = in[i] - sigma * sum_{k=1..m} gamma[k-1] * (in[i+k] - in[i-k])
// Indices wrap modulo n. Requires n > 2m. All variants are bit-identical
// (same per-element operation order, no FMA contraction).
void stencil_step(double* out, const double* in, std::size_t n, double sigma, const double* gamma,
                  int m);

double max_abs(const double* v, std::size_t n);
double max_abs_diff(const double* a, const double* b, std::size_t n);

// out[i] = 0.5 * in[i]^2
void half_square(double* out, const double* in, std::size_t n);

}  // namespace drp::kernels
