#include <iostream>
#include <string>
#include <vector>

#include <sgroth/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sgroth::cli::run(args, std::cout, std::cerr);
}
