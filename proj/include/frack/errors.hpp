#pragma once

#include <stdexcept>
#include <string>

namespace frack {

// Base class for all library errors.  Every failure mode gets a distinct
// type so callers (and the CLI) can map them to diagnostics and exit codes
// without string matching.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A series or iteration failed to reach the requested tolerance within the
// configured term/iteration budget.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Parameters violate a convergence condition (e.g. a series with a bounded
// disc of convergence evaluated outside it).
class DivergentParameters : public Error {
public:
    explicit DivergentParameters(const std::string& msg) : Error(msg) {}
};

// Two poles of the integrand coincide (or a pole of one gamma family lands
// on a pole of another), so the simple-pole residue expansion is invalid.
class DegeneratePoles : public Error {
public:
    explicit DegeneratePoles(const std::string& msg) : Error(msg) {}
};

// No admissible vertical contour exists, or the contour quadrature failed
// to converge.
class ContourFailure : public Error {
public:
    explicit ContourFailure(const std::string& msg) : Error(msg) {}
};

// Requested pair cancellation, but no upper parameter pair equals a lower
// pair in a cancellable position.
class NoCancellablePair : public Error {
public:
    explicit NoCancellablePair(const std::string& msg) : Error(msg) {}
};

// A sampled-function operation was asked to work on a grid too coarse to
// support the scheme.
class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(const std::string& msg) : Error(msg) {}
};

// An adaptive quadrature failed to meet its tolerance.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

// Numerical inverse Laplace transform approximants oscillate beyond
// tolerance; the result cannot be trusted.
class InversionUnstable : public Error {
public:
    explicit InversionUnstable(const std::string& msg) : Error(msg) {}
};

// An asymptotic formula was requested outside its regime of validity.
class OutOfAsymptoticRegime : public Error {
public:
    explicit OutOfAsymptoticRegime(const std::string& msg) : Error(msg) {}
};

// Argument or parameter validation failure (domain errors).
class InvalidParameters : public Error {
public:
    explicit InvalidParameters(const std::string& msg) : Error(msg) {}
};

// Malformed input data (CSV ingestion and similar).
class IngestionError : public Error {
public:
    explicit IngestionError(const std::string& msg) : Error(msg) {}
};

} // namespace frack
