#pragma once

#include <stdexcept>
#include <string>

namespace lvlab {

// Error taxonomy shared by all modules. Everything is a runtime_error so the
// CLI can map any failure to a nonzero exit code without caring which module
// threw it.

struct AccuracyNotReached : std::runtime_error {
    explicit AccuracyNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionDomain : DomainError {
    explicit DivisionDomain(const std::string& what) : DomainError(what) {}
};

struct DegenerateRange : DomainError {
    explicit DegenerateRange(const std::string& what) : DomainError(what) {}
};

struct SizeLimit : BudgetExceeded {
    explicit SizeLimit(const std::string& what) : BudgetExceeded(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct MissedZeroSuspected : std::runtime_error {
    explicit MissedZeroSuspected(const std::string& what) : std::runtime_error(what) {}
};

struct PlacementFailure : std::runtime_error {
    explicit PlacementFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NoValidK : DomainError {
    explicit NoValidK(const std::string& what) : DomainError(what) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lvlab
