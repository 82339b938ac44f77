#include "sentiprofile/cli.hpp"

#include <unistd.h>  // isatty, STDIN_FILENO

#include <iostream>  // std::cin, std::cout, std::cerr
#include <string>    // std::string
#include <vector>    // std::vector

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const bool interactive = ::isatty(STDIN_FILENO) != 0;
    return sentiprofile::cli::run(args, std::cout, std::cerr, std::cin, interactive);
}
