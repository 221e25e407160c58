#include <iostream>
#include <vector>

#include "tkh/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tkh::run_cli(args, std::cout, std::cerr);
}
