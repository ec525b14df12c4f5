#ifndef DISSOC_ERRORS_HPP
#define DISSOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dissoc {

// Search/order budget exceeded (graph order above the configured cap).
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the domain of a closed-form or constructor.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Family descriptor whose order equation has no solution.
struct InconsistentDescriptor : std::invalid_argument {
    explicit InconsistentDescriptor(const std::string& what) : std::invalid_argument(what) {}
};

// A lemma-check was invoked on inputs that violate its hypotheses.
struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

// Exact integer arithmetic would overflow 64 bits.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; the message names the offending field.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dissoc

#endif
