#pragma once

// Command-line front end. `run` is the whole program minus process plumbing
// so that tests can drive it in-process.
//
// Exit codes: 0 success, 2 argument/parse error, 3 configuration violation
// (grid cap, zero shots, bad search settings), 1 anything else. Output is
// produced only on success and written in one piece.

#include <iosfwd>
#include <string>
#include <vector>

namespace spinbell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;

/// Environment variable consulted for the default seed.
inline constexpr const char* kSeedEnv = "SPINBELL_SEED";

/// JSON documents carry this in "schema_version".
inline constexpr int kSchemaVersion = 1;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats with 15 significant digits, the precision used in every output.
std::string format_number(double x);

}  // namespace spinbell::cli
