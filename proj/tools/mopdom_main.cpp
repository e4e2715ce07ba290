#include "mopdom/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return mopdom::run(argc, argv, std::cin, std::cout, std::cerr);
}
