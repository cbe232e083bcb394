#pragma once

#include <string>
#include <vector>

namespace cpsurgery::cli {

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Parses argv-style arguments (without the program name) and runs the verb.
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure or table diff.
Outcome run(const std::vector<std::string>& args);

}  // namespace cpsurgery::cli
