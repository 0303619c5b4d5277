#ifndef KGROTH_CLI_HPP
#define KGROTH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kgroth {

// Build identifier; part of every cache file name so entries written by a
// different library version are never served.
inline constexpr const char* kVersionTag = "kgroth-0.1.0";

// Command-line driver. Results go to out, diagnostics to err. Returns the
// process exit code: 0 success, 1 computation or check failure, 2 usage
// error. Caching is enabled when the KGROTH_CACHE environment variable names
// a directory; cached runs replay the stored bytes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgroth

#endif
