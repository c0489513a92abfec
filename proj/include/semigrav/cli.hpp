#pragma once

#include <iosfwd>

namespace semigrav::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;

/// Environment variable naming the default output directory.
inline constexpr const char* output_dir_env = "SEMIGRAV_OUTPUT_DIR";

/// Entry point of the command-line tool, usable in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semigrav::cli
