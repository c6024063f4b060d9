#include <iostream>
#include <string>
#include <vector>

#include "valentkit/cli.hpp"

int main(int argc, char **argv)
{
    return valentkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
