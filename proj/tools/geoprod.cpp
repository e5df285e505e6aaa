#include <iostream>
#include <string>
#include <vector>

#include "geoprod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return geoprod::cli::run(args, std::cout, std::cerr);
}
