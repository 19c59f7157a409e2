#pragma once

#include <stdexcept>
#include <string>

namespace lflow {

// Exit-code taxonomy shared by the library and the CLI:
//   2 = configuration / domain error, 3 = input format error, 4 = numerical failure.
enum class ErrorCode : int {
    config = 2,
    format = 3,
    numeric = 4,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

  private:
    ErrorCode code_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(ErrorCode::config, msg) {}
};

// Bad values fed to an operation (non-finite angle, invalid q, even kernel, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(ErrorCode::config, msg) {}
};

// Malformed ensemble / checkpoint / CSV input.
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(ErrorCode::format, msg) {}
};

// NaN/overflow during computation, non-converged series, failed consistency check.
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(ErrorCode::numeric, msg) {}
};

// Constant input series where an autocorrelation estimate is requested.
struct FrozenObservableError : DomainError {
    explicit FrozenObservableError(const std::string& msg) : DomainError(msg) {}
};

} // namespace lflow
