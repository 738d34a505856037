#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catkit::cli {

// Full command driver, in-process so tests can capture streams and exit
// codes. `args` excludes the program name. Returns 0 on success, 1 when a
// mathematical check fails, 2 on expression parse or type errors, 3 on usage
// and input-file errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catkit::cli
