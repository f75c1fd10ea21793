#ifndef ARAKOUNT_ERRORS_HPP
#define ARAKOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arakount {

enum class ErrorKind {
    InvalidPoint,
    InvalidPolynomial,
    InvalidParams,
    InvalidFieldData,
    HypothesisViolated,
    BudgetExceeded,
    NotOnVariety,
    Unsupported,
    SingularMinor,
    SyntaxError,
    NonHomogeneous,
    UnknownVariable,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidFieldData: return "InvalidFieldData";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::SingularMinor: return "SingularMinor";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace arakount

#endif
