#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsp4::cli {

/// Runs the command line given as argument tokens (no program name).
/// Returns 0 when every check passes, 1 when some check fails, 2 on a
/// usage error. Human-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsp4::cli
