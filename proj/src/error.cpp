#include "markovcast/error.hpp"

namespace markovcast {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::size_error: return "size_error";
    case ErrorCode::domain_error: return "domain_error";
    case ErrorCode::degenerate_range: return "degenerate_range";
    case ErrorCode::infeasible_alphabet: return "infeasible_alphabet";
    case ErrorCode::contract_error: return "contract_error";
    case ErrorCode::config_error: return "config_error";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::input_not_found: return "input_not_found";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::usage_error: return "usage_error";
    }
    return "unknown";
}

int exit_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::input_not_found: return 2;
    case ErrorCode::parse_error: return 3;
    case ErrorCode::size_error: return 4;
    case ErrorCode::domain_error: return 5;
    case ErrorCode::degenerate_range: return 6;
    case ErrorCode::infeasible_alphabet: return 7;
    case ErrorCode::contract_error: return 8;
    case ErrorCode::config_error: return 9;
    case ErrorCode::io_error: return 10;
    case ErrorCode::usage_error: return 64;
    }
    return 1;
}

} // namespace markovcast
