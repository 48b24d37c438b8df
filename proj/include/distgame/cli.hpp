#pragma once

#include <string>
#include <vector>

namespace distgame {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a
/// verification assertion fails, 2 on usage errors.
int run(int argc, const char* const* argv);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace distgame
