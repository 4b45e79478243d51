#pragma once

#include <stdexcept>
#include <string>

namespace gem {

enum class ErrorKind {
    NotInvolution,
    LoopEdge,
    OddOrder,
    BadColorCount,
    Disconnected,
    WrongDimension,
    InvalidDipole,
    BadAttachment,
    NotClosed,
    NotPure,
    InvalidInput,
    IncompleteCatalog,
    BudgetExceeded,
    IntegralityViolation,
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotInvolution: return "NotInvolution";
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::OddOrder: return "OddOrder";
        case ErrorKind::BadColorCount: return "BadColorCount";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::InvalidDipole: return "InvalidDipole";
        case ErrorKind::BadAttachment: return "BadAttachment";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::IncompleteCatalog: return "IncompleteCatalog";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    }
    return "UnknownError";
}

// All library errors carry a kind so callers (and the CLI) can map them
// to exit codes without parsing messages.
class GemError : public std::runtime_error {
public:
    GemError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gem
