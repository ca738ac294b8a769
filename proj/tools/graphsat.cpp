#include <iostream>
#include <vector>

#include "gsat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gsat::cli::run(args, std::cout, std::cerr);
}
