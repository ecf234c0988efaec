#include <iostream>
#include <string>
#include <vector>

#include "tabcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return tabcomp::run_cli(args, std::cin, std::cout, std::cerr);
}
