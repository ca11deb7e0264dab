#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pivotal::cli {

enum ExitCode : int { ok = 0, property_false = 1, error = 2 };

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Largest arity accepted for exhaustive work, from PIVOTAL_MAX_ARITY (default 12).
std::size_t max_arity();

}  // namespace pivotal::cli
