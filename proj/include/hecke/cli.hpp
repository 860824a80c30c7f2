#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke {

/// Runs the hecke-coinv command line. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke
