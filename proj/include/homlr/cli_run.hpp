#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlr::cli {

// Dispatches one CLI invocation. The structured report is written to `out`,
// a human-readable summary to `err`. Exit status: 0 all checks pass,
// 1 a mathematical check failed, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace homlr::cli
