#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latsec::cli {

/// Runs the command line `args` (program name first). Output that is not
/// redirected with --out goes to `out`; diagnostics go to `err`.
/// Returns 0 on success, 1 on computation errors and 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latsec::cli
