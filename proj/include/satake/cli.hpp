#pragma once

// Command-line front end. Exit codes: 0 ok, 2 malformed input, 3 domain
// precondition, 4 inconclusive (strict), 5 mathematical inconsistency.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satake::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

enum ExitCode : int { kOk = 0, kInternal = 1, kParse = 2, kDomain = 3, kInconclusive = 4, kInconsistent = 5 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Window sizes used by verify-duality when --bound is omitted, keyed by the
/// fixture whose dual gets dumped.
long long default_window(const std::string& fixture);

}  // namespace satake::cli
