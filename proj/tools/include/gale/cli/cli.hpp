#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gale::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;

/// Runs one `gale` subcommand. `args` excludes the program name. Text output
/// (CSV, JSON lines) goes to `out` unless -o is given; diagnostics go to `err`.
/// Returns 0 on success, 2 on validation errors and unknown flags, 1 on I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gale::cli
