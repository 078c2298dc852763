#ifndef UWOC_ERRORS_HPP
#define UWOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uwoc {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// No vertical contour separates the ascending and descending pole
/// families of a Mellin-Barnes kernel.
struct ContourError : Error {
    using Error::Error;
};

/// A gamma argument of a closed form lands on (or within epsilon of) a
/// non-positive integer for the given channel parameters.
struct DegenerateParameterError : Error {
    using Error::Error;
};

/// Quadrature failed to converge within the node budget, or the result
/// failed the imaginary-residual sanity check.
struct ConvergenceError : Error {
    using Error::Error;
};

}  // namespace uwoc

#endif
