#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal {

// Exit codes: 0 success, 1 verification mismatch, 2 input error,
// 3 promise violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace extremal
