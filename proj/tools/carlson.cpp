#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "carlson/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return carlson::cli::run(args, std::cout, std::cerr, isatty(fileno(stdout)) != 0);
}
