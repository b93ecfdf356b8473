#pragma once

// Command-line front end: mgamma, clr, lt, cdsigma, asymptotic, verify, profile, table.

#include <iosfwd>
#include <string>
#include <vector>

namespace sharp::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kDomainError = 2,
    kNotConverged = 3,
    kVerificationFailed = 4,
};

/// Runs one command. `args` excludes the program name. Report text goes to
/// `out` unless --out is given; diagnostics go to `err`. `out_is_tty` picks
/// the default format (markdown for terminals, json otherwise).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty);

/// Worker count for per-gamma parallelism from SHARP_CONSTANTS_THREADS (0 or unset = hardware).
/// Throws std::invalid_argument on a malformed value.
unsigned thread_count(const char* env_value);

}  // namespace sharp::cli
