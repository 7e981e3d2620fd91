#include <iostream>
#include <string>
#include <vector>

#include "rhombus/cli.hpp"

int main(int argc, char** argv) {
    return rhombus::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
