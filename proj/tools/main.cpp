#include "parafock/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return parafock::cli::run(argc, argv, std::cout, std::cerr);
}
