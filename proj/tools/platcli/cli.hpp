#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plat::cli {

enum ExitStatus : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line. `args[0]` is the program name. Plat input comes
/// from the named file or, when absent or `-`, from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace plat::cli
