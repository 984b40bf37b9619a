#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coclass::cli {

/// Runs the command line with argv[0] omitted. Returns 0 on success, 1 on a
/// domain error or failed check, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coclass::cli
