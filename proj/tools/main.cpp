#include <iostream>
#include <string>
#include <vector>

#include "tweetsim/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return tweetsim::cli::run(args, std::cout, std::cerr);
}
