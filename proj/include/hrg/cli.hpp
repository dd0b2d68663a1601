#pragma once
#include <string>
#include <vector>

namespace hrg {

// Parses and runs one command line (program name excluded). Returns the
// process exit code: 0 success, 1 usage error, 2 validation or domain
// failure, 3 I/O failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace hrg
