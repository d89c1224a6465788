#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mbslab {

// Raised when an input violates a type invariant or an operation precondition
// (negative rate, kappa * delta > 1, month out of range, ...).
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}

    // Name of the offending input, empty when not attributable to one field.
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

[[noreturn]] inline void fail(std::string field, const std::string& message) {
    throw DomainError(std::move(field), message);
}

inline void require(bool ok, std::string field, const std::string& message) {
    if (!ok) fail(std::move(field), message);
}

}  // namespace mbslab
