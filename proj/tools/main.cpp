#include <iostream>
#include <string>
#include <vector>

#include "nilorbit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nilorbit::cli_main(std::move(args), std::cout, std::cerr);
}
