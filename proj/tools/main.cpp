#include <iostream>
#include <string>
#include <vector>

#include "scrollift/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return scrollift::run_command(args, std::cout, std::cerr);
}
