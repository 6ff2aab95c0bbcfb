#ifndef ROTINV_CLI_APP_HPP
#define ROTINV_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rotinv::cli {

// Exit codes shared with scripts driving the tool.
inline constexpr int exit_ok = 0;           // success / separable
inline constexpr int exit_usage = 2;        // unparseable or invalid input
inline constexpr int exit_strict_zero = 3;  // --strict and the exact value is zero
inline constexpr int exit_npt = 10;
inline constexpr int exit_ppt = 11;
inline constexpr int exit_unknown = 12;

/// Runs one invocation of the tool; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotinv::cli

#endif  // ROTINV_CLI_APP_HPP
