#pragma once

#include <iosfwd>

namespace markovcast {

/// Entry point behind the `markovcast` executable. Subcommands: forecast,
/// qerror, ensemble, aggregate. Returns the process exit status; on failure
/// an error JSON document {code, message, context} is written to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace markovcast
