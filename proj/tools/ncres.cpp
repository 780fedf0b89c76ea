#include <iostream>
#include <string>
#include <vector>

#include "ncres/cli/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ncres::cli::run(args, std::cin, std::cout, std::cerr);
}
