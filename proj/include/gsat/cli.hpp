#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsat::cli {

// Runs one command line (without the program name) and writes the JSON
// document to out. Returns the process exit code: 0 command completed
// (verdicts live in the JSON), 1 usage/parse error, 2 resource guard
// exceeded, 3 internal inconsistency. Error text goes to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gsat::cli
