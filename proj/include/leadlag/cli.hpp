#pragma once

#include <string>
#include <vector>

namespace leadlag::cli {

// Runs one CLI command. Returns the process exit code: 0 on success,
// 1 on a domain error (single-line diagnostic on stderr), CLI11's code on
// flag parse errors.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without argv[0]

}  // namespace leadlag::cli
