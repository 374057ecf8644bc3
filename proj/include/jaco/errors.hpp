#pragma once

#include <stdexcept>

namespace jaco {

// Thrown when an exhaustive computation would exceed its configured budget
// and the caller did not ask to force it.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a structural precondition fails, e.g. asking for the canonical
// cover of a graph whose term sequence is not non-decreasing.
class precondition_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace jaco
