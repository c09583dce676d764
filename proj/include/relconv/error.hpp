#pragma once

#include <stdexcept>

namespace relconv {

/// Malformed or inconsistent input (out-of-range vertex, unknown gallery name, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured cap or search budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace relconv
