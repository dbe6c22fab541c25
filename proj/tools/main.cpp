#include <iostream>

#include "esga_cli.hpp"

int main(int argc, char** argv) {
    return esga::cli::run(argc, argv, std::cout, std::cerr);
}
