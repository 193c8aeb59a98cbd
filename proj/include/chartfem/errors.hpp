#pragma once

#include <stdexcept>
#include <string>

namespace chartfem {

/// A query point lies outside a grid or chart domain beyond tolerance.
class OutOfDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A user-supplied field produced NaN/Inf where a finite value is required.
class InvalidDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every raw partition-of-unity weight vanished at a point the decomposition
/// must cover.  This indicates a broken atlas, not a numerical glitch.
class CoverageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solve failed to reach its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chartfem
