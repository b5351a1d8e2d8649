#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tkdr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a concatenated collection on `sep`; a trailing separator does not
// open an extra empty document.
std::vector<std::string> split_collection(const std::string& data, char sep);

// "0x0a", "10" or a single literal character.
char parse_separator(const std::string& spec);

}  // namespace tkdr::cli
