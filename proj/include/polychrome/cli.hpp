#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polychrome {

/// Command-line entry point. Exit codes: 0 success, 1 verification found a
/// violation, 2 malformed flags or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polychrome
