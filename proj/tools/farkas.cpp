#include <iostream>

#include "farkas/cli.hpp"

int main(int argc, char** argv)
{
    return farkas::run_cli(argc, argv, std::cout, std::cerr);
}
