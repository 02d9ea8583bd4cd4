#include "enumstat/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_precision;
    if (const char* p = std::getenv("ENUMSTAT_PRECISION")) env_precision = p;
    return enumstat::run_cli(args, std::cout, std::cerr, env_precision);
}
