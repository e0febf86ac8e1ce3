#pragma once

#include <stdexcept>
#include <string>

namespace flatcs {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad arguments: group mismatch, shape mismatch, invalid grid, malformed input.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Principal matrix logarithm hit the branch cut (eigenvalue near -1).
class BranchCutError : public Error {
public:
    using Error::Error;
};

/// Polar-type retraction failed (input too far from the group, or wrong component).
class RetractionError : public Error {
public:
    using Error::Error;
};

/// The requested representation-variety data is infeasible (empty variety).
class FeasibilityError : public Error {
public:
    using Error::Error;
};

/// Iterative solver failed to reach the requested defect.
class SolverError : public Error {
public:
    SolverError(const std::string& msg, double best) : Error(msg), best_defect(best) {}
    double best_defect;
};

/// Path continuation failed at an intermediate step.
class ContinuationError : public Error {
public:
    ContinuationError(const std::string& msg, int step) : Error(msg), failing_step(step) {}
    int failing_step;
};

/// A connection violated a flatness precondition.
class FlatnessError : public Error {
public:
    using Error::Error;
};

/// Grid resolution too coarse for the requested operation.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Gauge-map field violated the discrete smoothness invariant.
class StencilError : public Error {
public:
    using Error::Error;
};

/// A stated precondition (symmetry, nearness) failed.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Heat flow exceeded its step budget.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& msg, double energy) : Error(msg), final_energy(energy) {}
    double final_energy;
};

/// Gluing-ledger identity violated beyond tolerance.
class LedgerError : public Error {
public:
    using Error::Error;
};

/// Unsupported group requested from the catalog.
class CatalogError : public Error {
public:
    using Error::Error;
};

/// Plot request lacks the needed series.
class PlotError : public Error {
public:
    using Error::Error;
};

/// CLI/config usage problem.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace flatcs
