#include "command.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto o = cpsurgery::cli::run(args);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
