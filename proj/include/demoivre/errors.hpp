#pragma once

#include <stdexcept>
#include <string>

namespace demoivre {

// Argument outside an operation's stated domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Probe kind does not support the requested operation (no decay bound,
// wrong tail behaviour, ...).
class UnsupportedProbeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Method not applicable to the given probe (e.g. series pairing of a
// non-indicator probe).
class UnsupportedMethodError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integrand produced a non-finite value; remembers the offending node.
class NonFiniteResultError : public std::runtime_error {
public:
    explicit NonFiniteResultError(double node)
        : std::runtime_error("non-finite integrand value at x = " + std::to_string(node)),
          node_(node) {}
    double node() const { return node_; }

private:
    double node_;
};

// Too few usable data points for a fit.
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace demoivre
