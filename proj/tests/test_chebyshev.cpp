#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "drp/chebyshev.hpp"

using drp::cos_multiple;
using drp::sin_multiple;

namespace {

// Explicit Chebyshev polynomial of the first kind,
//   T_n(x) = (n/2) sum_{k=0}^{floor(n/2)} (-1)^k (n-k-1)! / (k! (n-2k)!) (2x)^{n-2k},
// an expansion entirely independent of the recurrence under test.
double factorial(int n) {
    double r = 1.0;
    for (int j = 2; j <= n; ++j) r *= j;
    return r;
}

double chebyshev_polynomial(int n, double x) {
    if (n == 0) return 1.0;
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        const double coeff = factorial(n - k - 1) / (factorial(k) * factorial(n - 2 * k));
        const double term = coeff * std::pow(2.0 * x, n - 2 * k);
        sum += (k % 2 == 0 ? term : -term);
    }
    return 0.5 * n * sum;
}

}  // namespace

TEST_CASE("cos_multiple and sin_multiple match the trig oracles for |j| <= 12") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = dist(rng);
        const double a = std::acos(theta);
        for (int j = -12; j <= 12; ++j) {
            CHECK(std::fabs(cos_multiple(j, theta) - std::cos(j * a)) < 1e-10);
            CHECK(std::fabs(sin_multiple(j, theta) - std::sin(j * a)) < 1e-10);
        }
    }
}

TEST_CASE("cos_multiple agrees with the explicit polynomial expansion") {
    for (const double theta : {-0.9, -0.5, 0.0, 0.5, 0.9})
        for (int n = 1; n <= 10; ++n)
            CHECK(cos_multiple(n, theta) ==
                  doctest::Approx(chebyshev_polynomial(n, theta)).epsilon(1e-12));
}

TEST_CASE("endpoint values are exact") {
    for (int j = 0; j <= 12; ++j) {
        CHECK(sin_multiple(j, 1.0) == 0.0);
        CHECK(sin_multiple(j, -1.0) == 0.0);
        CHECK(cos_multiple(j, 1.0) == 1.0);
        CHECK(cos_multiple(j, -1.0) == (j % 2 == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("parity in the index") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = dist(rng);
        for (int j = 0; j <= 12; ++j) {
            CHECK(cos_multiple(-j, theta) == cos_multiple(j, theta));
            CHECK(sin_multiple(-j, theta) == -sin_multiple(j, theta));
        }
    }
}

TEST_CASE("arguments outside [-1, 1] are rejected") {
    CHECK_THROWS_AS((void)cos_multiple(3, 1.0000001), std::domain_error);
    CHECK_THROWS_AS((void)sin_multiple(3, -1.0000001), std::domain_error);
}
