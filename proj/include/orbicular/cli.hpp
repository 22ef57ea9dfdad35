#pragma once

#include <iosfwd>

namespace orbicular {

/// Subcommands: validate, form, solve, sweep, report.
/// Returns 0 on success, 1 on invalid data, 2 on usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace orbicular
