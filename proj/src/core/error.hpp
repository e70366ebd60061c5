#pragma once

#include <stdexcept>
#include <string>

namespace wfa {

enum class ErrorCode {
    Parse,
    Dimension,
    AlphabetMismatch,
    UnknownSymbol,
    BudgetExceeded,
    Singular,
    Inconsistent,
    Precondition,
    Io,
    Internal,
};

// Every error raised by the core carries a code so the C boundary can map it
// to a status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace wfa
