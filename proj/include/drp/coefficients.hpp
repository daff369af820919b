#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace drp {

// Antisymmetric first-derivative stencil on 2m+1 points. Only the
// independent coefficients gamma_1..gamma_m are stored; gamma_0 = 0 and
// gamma_{-k} = -gamma_k are structural.
struct SchemeCoefficients {
    int m = 0;
    std::vector<double> gamma;  // gamma[k-1] = gamma_k, k = 1..m

    SchemeCoefficients() = default;
    SchemeCoefficients(int half_width, std::vector<double> g)
        : m(half_width), gamma(std::move(g)) {
        validate();
    }

    void validate() const {
        if (m < 1)
            throw std::invalid_argument("SchemeCoefficients: m must be >= 1");
        if (static_cast<int>(gamma.size()) != m)
            throw std::invalid_argument("SchemeCoefficients: gamma must have exactly m entries");
        for (double g : gamma)
            if (!std::isfinite(g))
                throw std::invalid_argument("SchemeCoefficients: non-finite coefficient");
    }

    // Full accessor over k in [-m, m].
    double gamma_at(int k) const {
        if (k == 0) return 0.0;
        if (k > 0) return gamma.at(static_cast<std::size_t>(k) - 1);
        return -gamma.at(static_cast<std::size_t>(-k) - 1);
    }

    // Identically zero by antisymmetry; summed in cancelling pairs so the
    // invariant holds exactly in floating point.
    double coefficient_sum() const {
        double s = 0.0;
        for (int k = 1; k <= m; ++k) s += gamma_at(k) + gamma_at(-k);
        return s;
    }
};

}  // namespace drp
