#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdc::cli {

/// Run the command-line front end. Exit codes: 0 success, 1 selftest
/// verdict failure, 2 parse error, 3 domain violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdc::cli
