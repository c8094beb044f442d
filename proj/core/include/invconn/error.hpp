#pragma once

#include <stdexcept>
#include <string>

namespace invconn {

// Malformed input: bad series/rank, wrong label length, unknown ids.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation called outside its domain (non-dominant weight, mismatched root systems).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Family parameter out of its documented range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Data that cannot be a representation (negative multiplicity, bad constituent set).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exactness guarantee was broken (non-integral division, int64 overflow).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work estimate exceeds the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace invconn
