#include <iostream>
#include <string>
#include <vector>

#include "dmagic/app/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return dmagic::app::run_cli(args, std::cout, std::cerr);
}
