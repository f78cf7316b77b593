#include <iostream>
#include <string>
#include <vector>

#include "bvls/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bvls::cli::dispatch(args, std::cout, std::cerr);
}
