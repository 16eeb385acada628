#pragma once

#include <cstdint>
#include <ostream>
#include <string_view>

namespace spreadlab::cli {

/// Runs one command. Reports go to `out` as JSON lines, diagnostics to `err`.
/// Exit codes: 0 success, 2 usage or validation error, 1 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// FNV-1a 64 of the canonical command input, as 16 hex digits.
std::string digest(std::string_view canonical_input);

}  // namespace spreadlab::cli
