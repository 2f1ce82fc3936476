#include <iostream>

#include "crosscount/cli.hpp"

int main(int argc, char** argv) {
    return crosscount::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
