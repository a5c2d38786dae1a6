#include <iostream>

#include "dzx_tools/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv + 1, argv + argc);
    return dzx::cli::run(args, std::cin, std::cout, std::cerr);
}
