#include <iostream>
#include <string>
#include <vector>

#include "pbf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pbf::run(args, std::cout, std::cerr);
}
