#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace enumstat {

/// Malformed input text: a record line, a CSV row, or a polynomial.
/// `location()` is a 1-based line number for record input and a 0-based
/// byte offset for polynomial text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t location)
        : std::runtime_error(what), location_(location) {}

    [[nodiscard]] std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

/// A caller broke an operation's precondition (unnormalized enumerator,
/// empty corpus, out-of-range option).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Mathematically undefined request, e.g. a fractional power at a point
/// other than 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Zero variance on an axis that a standardized moment divides by.
class DegenerateDistributionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace enumstat
