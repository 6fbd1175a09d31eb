#include <iostream>
#include <string>
#include <vector>

#include "diracbox/cli/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return diracbox::cli::run(args, std::cout, std::cerr);
}
