#pragma once

#include <stdexcept>
#include <string>

namespace dickman {

// Base class for every error thrown by this library. what() always starts
// with the concrete error name so the CLI can report it on stderr.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("DomainError: " + msg) {}
};

// Adaptive quadrature ran out of subdivision depth. Carries the best
// estimate accumulated so far and the total error bound of the panels
// that failed to converge.
class DepthExceeded : public Error {
public:
    DepthExceeded(const std::string& msg, double best, double bound)
        : Error("DepthExceeded: " + msg), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

class NonFiniteSample : public Error {
public:
    explicit NonFiniteSample(const std::string& msg) : Error("NonFiniteSample: " + msg) {}
};

class ConstantTermNonzero : public Error {
public:
    explicit ConstantTermNonzero(const std::string& msg)
        : Error("ConstantTermNonzero: " + msg) {}
};

class InsufficientZetaTable : public Error {
public:
    explicit InsufficientZetaTable(const std::string& msg)
        : Error("InsufficientZetaTable: " + msg) {}
};

class TailTooLarge : public Error {
public:
    TailTooLarge(const std::string& msg, double bound, double tol)
        : Error("TailTooLarge: " + msg), tail_bound(bound), requested_tol(tol) {}
    double tail_bound;
    double requested_tol;
};

class BranchCutTouched : public Error {
public:
    explicit BranchCutTouched(const std::string& msg) : Error("BranchCutTouched: " + msg) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error("OutOfRange: " + msg) {}
};

class RecursionBudgetExceeded : public Error {
public:
    explicit RecursionBudgetExceeded(const std::string& msg)
        : Error("RecursionBudgetExceeded: " + msg) {}
};

class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& msg) : Error("ResourceLimit: " + msg) {}
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error("FormatError: " + msg) {}
};

} // namespace dickman
