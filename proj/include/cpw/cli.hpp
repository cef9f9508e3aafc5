#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpw::cli {

/// Dispatch one command-line invocation. Certificates go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 verification failure,
/// 2 parse error, 3 precondition violation, 4 oracle budget refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpw::cli
