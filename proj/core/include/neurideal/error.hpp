#pragma once

#include <stdexcept>
#include <string>

namespace neurideal {

enum class ErrorKind {
    Parse,
    TooManyNeurons,
    NeuronMismatch,
    NonSquarefreeProduct,
    PairViolation,
    ZeroIdeal,
    UnitOrZeroIdeal,
    LengthMismatch,
    NotSplittable,
    JNotLinear,
    NotDominant,
    OutOfRange,
    NotEquigeneratedDegreeN,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::Parse, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based line of the offending input, 0 when not line oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace neurideal
