#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vspace::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;       // success / property holds / connected
inline constexpr int kRefuted = 1;  // refuted, not connected, violations found
inline constexpr int kError = 2;    // parse, validation or budget error

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vspace::cli
