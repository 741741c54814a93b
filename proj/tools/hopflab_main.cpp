#include <iostream>

#include "hopflab/cli.hpp"

int main(int argc, char** argv) {
    return hopflab::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
