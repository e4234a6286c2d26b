#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbf {

/// Command dispatch for the pbf tool. `args` excludes the program name.
/// Returns 0 on success (all checks hold), 1 on a verified inequality
/// violation, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pbf
