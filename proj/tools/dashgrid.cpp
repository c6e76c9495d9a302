#include <iostream>

#include "dashgrid/commands.hpp"

int main(int argc, char** argv) {
    return dashgrid::run_cli(argc, argv, std::cout, std::cerr);
}
