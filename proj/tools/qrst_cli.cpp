#include <iostream>

#include "qrst/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qrst::cli::dispatch(std::move(args), std::cout, std::cerr);
}
