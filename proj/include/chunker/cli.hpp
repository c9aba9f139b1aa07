#ifndef CHUNKER_CLI_HPP
#define CHUNKER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chunker::cli {

/// Exit codes: 0 success, 2 usage error, 3 input parse error, 4 corpus
/// mismatch, 1 anything else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitMismatch = 4;
inline constexpr int kExitOther = 1;

/// Runs one subcommand. `args` excludes the program name. Input paths accept
/// "-" for `in`; an empty/missing --out writes to `out`. Diagnostics and
/// errors go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace chunker::cli

#endif
