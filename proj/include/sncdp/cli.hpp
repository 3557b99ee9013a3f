#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sncdp {

// argv without the program name. Exit codes: 0 success, 1 domain error or
// unreadable file, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sncdp
