#pragma once

#include <stdexcept>
#include <string>

namespace cohiggs {

// Domain-level failure with a stable wire name ("KaehlerCase", "LedgerViolation", ...).
// These map to exit code 3 in the CLI and COHIGGS_DOMAIN_ERROR in the C API.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Malformed or type-invalid input (bad JSON, "1/0", wrong shape). Exit code 2.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cohiggs
