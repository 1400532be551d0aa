#include <iostream>
#include <string>
#include <vector>

#include "lorcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lorcat::run_cli(args, std::cout, std::cerr);
}
