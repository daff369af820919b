#include "drp/chebyshev.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace drp {

namespace {
void check_domain(double theta) {
    if (std::fabs(theta) > 1.0)
        throw std::domain_error("chebyshev: theta must lie in [-1, 1]");
}
}  // namespace

double cos_multiple(int j, double theta) {
    check_domain(theta);
    const int n = std::abs(j);
    if (n == 0) return 1.0;
    double prev = 1.0;   // T_0
    double cur = theta;  // T_1
    for (int i = 2; i <= n; ++i) {
        const double next = 2.0 * theta * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double sin_multiple(int j, double theta) {
    check_domain(theta);
    if (j == 0) return 0.0;
    const int n = std::abs(j);
    const double s1 = std::sqrt((1.0 - theta) * (1.0 + theta));  // sin(arccos theta), 0 at +-1
    double prev = 0.0;  // sin(0 x)
    double cur = s1;    // sin(1 x)
    for (int i = 2; i <= n; ++i) {
        const double next = 2.0 * theta * cur - prev;
        prev = cur;
        cur = next;
    }
    return j > 0 ? cur : -cur;
}

}  // namespace drp
