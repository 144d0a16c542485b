#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

/**
 * Raised when a computation cannot deliver the requested ultrametric
 * precision, e.g. inverting an element whose known digit window is too
 * narrow, or dividing by something that is zero to working precision.
 */
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised when a request exceeds a precomputed table or a hard size cap. */
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/** Raised when an iteration fails to contract (fixed points, series tails). */
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace carlitz
