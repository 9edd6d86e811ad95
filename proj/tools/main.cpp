#include <iostream>

#include "quadguess/cli.hpp"

int main(int argc, char **argv)
{
    return quadguess::cli::run(argc, argv, std::cout, std::cerr);
}
