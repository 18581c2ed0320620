#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

/// Input text could not be parsed. `pos` is a 0-based character offset
/// into the offending text when known, -1 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, long pos = -1)
        : std::runtime_error(msg), pos_(pos) {}
    long position() const noexcept { return pos_; }

private:
    long pos_;
};

/// Structurally valid input that violates a precondition (bad label,
/// missing orientation, dimension mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation was refused because its estimated cost exceeds the
/// configured budget.
class CostLimitError : public std::runtime_error {
public:
    CostLimitError(const std::string& msg, unsigned long long estimated)
        : std::runtime_error(msg), estimated_(estimated) {}
    unsigned long long estimated_cost() const noexcept { return estimated_; }

private:
    unsigned long long estimated_;
};

} // namespace qlink
