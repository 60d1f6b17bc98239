#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farey {

// Exit codes: 0 ok, 2 schema/usage, 3 degenerate development,
// 4 invalid flip set, 5 certificate failure under --assert.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farey
