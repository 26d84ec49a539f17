#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rowland::cli {

/// Runs one command. `args` excludes the program name. Data records and
/// reports go to `out`; diagnostics to `err`. Returns the process exit
/// code: 0 success/pass, 1 Fail verdicts, 2 usage or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rowland::cli
