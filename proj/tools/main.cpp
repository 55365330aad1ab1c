#include <iostream>
#include <string>
#include <vector>

#include "ppoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ppoly::cli::run(std::move(args), std::cout, std::cerr);
}
