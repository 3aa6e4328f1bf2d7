#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace markovcast {

enum class ErrorCode {
    size_error,
    domain_error,
    degenerate_range,
    infeasible_alphabet,
    contract_error,
    config_error,
    parse_error,
    input_not_found,
    io_error,
    usage_error,
};

/// Stable machine-readable name, e.g. "input_not_found".
std::string_view to_string(ErrorCode code);

/// Process exit status the CLI uses for each code. Zero is never returned.
int exit_status(ErrorCode code);

/// Every failure raised by the library. `context` is a short free-form
/// locator (a level, a row, a flag) and may be empty.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    std::string context_;
};

} // namespace markovcast
