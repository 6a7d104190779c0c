#include "adjdyn/error.hpp"

namespace adjdyn {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
        case ErrorKind::DuplicateEntry: return "DuplicateEntry";
        case ErrorKind::NonFiniteWeight: return "NonFiniteWeight";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::ArgumentTooSmall: return "ArgumentTooSmall";
        case ErrorKind::StencilWiderThanGrid: return "StencilWiderThanGrid";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::RuleOutOfRange: return "RuleOutOfRange";
        case ErrorKind::KeyOutOfTable: return "KeyOutOfTable";
        case ErrorKind::NonIntegerKey: return "NonIntegerKey";
        case ErrorKind::BadStateValue: return "BadStateValue";
        case ErrorKind::TooFewRows: return "TooFewRows";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace adjdyn
