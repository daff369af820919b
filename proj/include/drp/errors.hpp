#pragma once

#include <stdexcept>
#include <string>

namespace drp {

// Thrown when a time-stepped run blows past the instability cap.
class NumericalAbort : public std::runtime_error {
public:
    explicit NumericalAbort(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an amplification factor degenerates to zero modulus.
class DegenerateAmplification : public std::runtime_error {
public:
    explicit DegenerateAmplification(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drp
