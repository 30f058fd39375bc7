#include <iostream>
#include <vector>

#include "cgb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cgb::cli::run(args, std::cout, std::cerr);
}
