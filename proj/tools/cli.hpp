#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgwa {

// Exit codes: 0 every assertion passed, 1 an assertion or computation failed,
// 2 usage, parse, schema or unsupported-feature error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgwa
