#pragma once

#include <stdexcept>

namespace herschel {

/// Difference-table growth past the configured row cap.
class table_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exactness assertion failed (inexact division, non-integral result).
/// Signals a bug upstream, not bad user input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requested working precision rejected, or detected as insufficient by the
/// two-precision agreement check.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace herschel
