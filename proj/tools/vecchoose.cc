#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return vecchoose::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
