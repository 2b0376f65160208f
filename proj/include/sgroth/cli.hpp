#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgroth::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

// Runs one command line (args excludes the program name). Results go to
// `out`; usage errors, naming the offending option, go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sgroth::cli
