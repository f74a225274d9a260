#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ceresa::cli {

/// Exit codes of the ceresa-kit tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };

/// Runs one invocation. args[0] is the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Splits "-a=-12/1" into "-a", "-12/1" so values may start with a minus.
std::vector<std::string> split_attached_values(std::vector<std::string> args);

/// Thread cap from CERESA_KIT_THREADS, 0 when unset or invalid.
unsigned env_thread_cap();

}  // namespace ceresa::cli
