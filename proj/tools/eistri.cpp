#include <iostream>

#include "eistri/cli.hpp"

int main(int argc, char** argv) {
    return eistri::cli::run(argc, argv, std::cout, std::cerr);
}
