#pragma once

#include <stdexcept>
#include <string>

namespace mistab {

/// Violated precondition or malformed input. The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap was hit before the computation finished.
/// The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Checked exponent arithmetic overflowed 64 bits.
class ExponentOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mistab
