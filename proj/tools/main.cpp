#include <iostream>

#include "cuspfol/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cuspfol::cli::Result r = cuspfol::cli::run(args);
    (r.exit_code == cuspfol::cli::InputError ? std::cerr : std::cout) << r.text;
    return r.exit_code;
}
