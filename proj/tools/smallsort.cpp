#include <iostream>
#include <string>
#include <vector>

#include "smallsort/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return smallsort::cli::run(args, std::cout, std::cerr);
}
