#pragma once

// The qmarkov command line, callable in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qmarkov::cli {

enum ExitCode : int { kOk = 0, kBadInput = 1, kDisagreement = 2 };

/// args excludes the program name.  env_bound is the raw value of
/// QMARKOV_ORACLE_BOUND, if set.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_bound = std::nullopt);

}  // namespace qmarkov::cli
