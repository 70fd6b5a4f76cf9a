#include <iostream>
#include <string>
#include <vector>

#include "volkenborn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return volkenborn::run_cli(args, std::cout, std::cerr);
}
