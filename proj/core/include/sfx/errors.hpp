#ifndef SFX_ERRORS_HPP
#define SFX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfx {

// An operation was called on input that violates its precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical check failed where the caller required success.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sfx

#endif
