#include <iostream>

#include "xyzfam/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return xyzfam::cli::run(args, std::cout, std::cerr);
}
