#include <iostream>
#include <string>
#include <vector>

#include "ecoc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ecoc::run_cli(args, std::cout, std::cerr);
}
