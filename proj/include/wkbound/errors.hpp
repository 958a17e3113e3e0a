#pragma once

#include <stdexcept>
#include <string>

namespace wkbound {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside an operation's domain (inside the hard wall, forbidden
/// region, non-positive energy, ...).
struct domain_error : error {
    using error::error;
};

/// The V'' = 0 branch was requested from an operation that needs V'' > 0.
struct degenerate_error : error {
    using error::error;
};

/// The operation is well formed but has no solution for these parameters.
struct not_applicable_error : error {
    using error::error;
};

/// A root finder, bracket expansion, or eigensolver failed to converge.
struct solver_error : error {
    using error::error;
};

/// The integration grid is too coarse for a consistent result.
struct grid_error : error {
    using error::error;
};

/// Adaptive quadrature failed to reach its tolerance.
struct quadrature_error : error {
    using error::error;
};

/// Argument outside the implemented range of a special function.
struct range_error : error {
    using error::error;
};

}  // namespace wkbound
