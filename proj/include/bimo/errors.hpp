#ifndef BIMO_ERRORS_HPP
#define BIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bimo {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    DanglingEndpoint,
    UnknownVertex,
    ParseError,
    InvalidSpec,
    GenerationFailed,
    NotAssociative,
    NoIdentity,
    NotAGroup,
    OrderBudgetExceeded,
    GroupTooSmall,
    GadgetCountMismatch,
    GadgetNotRigid,
    GadgetSizeTooSmall,
    SubmonoidTooSmall,
    SubmonoidNotInGroup,
    BudgetExceeded,
    ClosureBudgetExceeded,
    InvalidRadius,
    TargetTooSmall,
    Mismatch,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace bimo

#endif
