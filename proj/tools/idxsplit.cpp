#include <iostream>
#include <string>
#include <vector>

#include "idxsplit/cli/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return idxsplit::cli::run(args, std::cout, std::cerr);
}
