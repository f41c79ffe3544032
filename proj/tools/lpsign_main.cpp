#include <iostream>
#include <vector>

#include "lpsign/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lpsign::run(args, std::cout, std::cerr);
}
