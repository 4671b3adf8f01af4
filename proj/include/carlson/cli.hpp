#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carlson::cli {

enum ExitStatus : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kDomainError = 3,
};

/// Parses `args` (without the program name) and runs one command. Output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
/// `out_is_terminal` picks the default format: table on a terminal, csv
/// otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_terminal);

}  // namespace carlson::cli
