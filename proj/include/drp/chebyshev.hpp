#pragma once

namespace drp {

// cos(j * arccos(theta)), evaluated by the stable three-term recurrence.
// Even in j. Throws std::domain_error for |theta| > 1.
double cos_multiple(int j, double theta);

// sin(j * arccos(theta)). Odd in j; exactly zero at theta = +-1.
// Throws std::domain_error for |theta| > 1.
double sin_multiple(int j, double theta);

}  // namespace drp
