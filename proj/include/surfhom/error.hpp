#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfhom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed triangulation text. line() is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Operation called outside its precondition (flip on a boundary segment, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A relation-free path grew past the enumeration guard.
class NotFiniteDimensional : public Error {
public:
    using Error::Error;
};

// Chain basis enumeration exceeded its cap.
class OracleTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace surfhom
