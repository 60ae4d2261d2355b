#ifndef PTAS_ERRORS_HPP
#define PTAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptas {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (polynomial text, rational literals, graph files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    explicit ParseError(const std::string& what)
        : Error(what), position_(npos) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that violates an operation's precondition
/// (wrong degree, dimension mismatch, r = 0, division by zero, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not. Should be unreachable.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace ptas

#endif // PTAS_ERRORS_HPP
