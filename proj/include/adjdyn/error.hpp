#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adjdyn {

enum class ErrorKind {
    IndexOutOfBounds,
    DuplicateEntry,
    NonFiniteWeight,
    DimensionMismatch,
    NotSquare,
    NoConvergence,
    ArgumentTooSmall,
    StencilWiderThanGrid,
    DegreeTooLarge,
    RuleOutOfRange,
    KeyOutOfTable,
    NonIntegerKey,
    BadStateValue,
    TooFewRows,
    SingularSystem,
    InvalidArgument,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. what() is "<Kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace adjdyn
