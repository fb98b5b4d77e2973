#include <iostream>
#include <string>
#include <vector>

#include "qb2/workbench.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qb2::cli_dispatch(args, std::cout, std::cerr);
}
