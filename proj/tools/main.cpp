#include <iostream>
#include <string>
#include <vector>

#include "bressoud/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bressoud::cli_run(args, std::cout, std::cerr);
}
