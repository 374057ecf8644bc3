#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jaco::cli {

// Entry point shared by the binary and the tests. args excludes argv[0].
// Exit codes: 0 = success (all claims verified / all table cells match),
// 1 = at least one refutation or table mismatch, 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jaco::cli
