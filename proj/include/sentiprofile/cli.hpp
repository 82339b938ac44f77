#ifndef SENTIPROFILE_CLI_HPP_
#define SENTIPROFILE_CLI_HPP_

#include <iosfwd>  // std::istream, std::ostream
#include <span>    // std::span
#include <string>  // std::string

namespace sentiprofile::cli {

inline constexpr int exit_ok = 0;
/// Bad data: unreadable files, malformed rows, unresolved labels, failed integrity checks.
inline constexpr int exit_data_error = 1;
/// Bad invocation, or the questionnaire was aborted.
inline constexpr int exit_usage_error = 2;

/// Runs one command line (without the program name). JSON results go to
/// `out`, diagnostics and wizard prompts to `err`. `interactive` tells
/// whether `in` is a terminal the wizard may read from.
[[nodiscard]] int run(std::span<const std::string> args, std::ostream &out, std::ostream &err, std::istream &in, bool interactive);

}  // namespace sentiprofile::cli

#endif  // SENTIPROFILE_CLI_HPP_
