#pragma once

#include <stdexcept>
#include <string>

namespace pqsym {

/* Domain errors map to CLI exit code 1, usage errors to 2. */

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeMismatchError : Error {
    explicit DegreeMismatchError(const std::string& msg) : Error(msg) {}
};

struct InvalidIndexError : Error {
    explicit InvalidIndexError(const std::string& msg) : Error(msg) {}
};

struct NotInCatalanSpanError : Error {
    explicit NotInCatalanSpanError(const std::string& msg) : Error(msg) {}
};

struct NotInSymSpanError : Error {
    explicit NotInSymSpanError(const std::string& msg) : Error(msg) {}
};

struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// a computation contradicted a structural guarantee (e.g. a regroup that must succeed)
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

// syntax/usage problems; carries a 0-based input position when known
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ExprTypeError : Error {
    explicit ExprTypeError(const std::string& msg) : Error(msg) {}
};

} // namespace pqsym
