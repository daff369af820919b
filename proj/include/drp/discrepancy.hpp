#pragma once

#include <string>
#include <vector>

#include "drp/config.hpp"

namespace drp {

// One reconciliation record between a stated reference value and what this
// implementation computes.
struct DiscrepancyClaim {
    std::string claim_id;
    std::string location;  // where the reference analysis states the value
    std::string stated_value;
    std::string computed_value;
    bool agree = false;
    double tolerance = 0.0;
};

struct DiscrepancyReport {
    std::vector<DiscrepancyClaim> claims;  // sorted by claim_id
};

// Evaluate the fixed claim registry: the 3-point coefficient, the stationary
// set of the closed-form backend, f1(1)/f2(1), the general-vs-closed-form
// phase mismatch, and the two L_inf limits of the error model.
DiscrepancyReport build_discrepancy_report(const RunConfig& cfg);

// "claim_id,location,stated_value,computed_value,agree,tolerance"
std::string discrepancy_csv(const DiscrepancyReport& report);

}  // namespace drp
