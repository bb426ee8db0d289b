#ifndef QPOT_ERROR_HPP
#define QPOT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpot {

/// Raised when caller-supplied data violates a documented precondition
/// (shape mismatch, malformed JSON, coincident points, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails on otherwise valid input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

} // namespace qpot

#endif // QPOT_ERROR_HPP
