#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace graphstat {

/// Buckets map to CLI exit codes: InvalidInput -> 2, Guard -> 3, Internal -> 4.
enum class ErrorKind { InvalidInput, Guard, Internal };

/// All library errors carry a short stable code ("SelfLoop", "BudgetExceeded", ...)
/// next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error invalid_input(std::string code, const std::string& what) {
    return Error(ErrorKind::InvalidInput, std::move(code), what);
}
inline Error guard(std::string code, const std::string& what) {
    return Error(ErrorKind::Guard, std::move(code), what);
}
inline Error internal(std::string code, const std::string& what) {
    return Error(ErrorKind::Internal, std::move(code), what);
}

}  // namespace graphstat
