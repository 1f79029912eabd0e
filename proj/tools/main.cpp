#include <iostream>
#include <vector>

#include "autoflow/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return autoflow::cli::run(std::move(args), std::cout, std::cerr);
}
