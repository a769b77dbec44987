#include <iostream>
#include <string>
#include <vector>

#include "oldqm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return oldqm::run(args, std::cout, std::cerr);
}
