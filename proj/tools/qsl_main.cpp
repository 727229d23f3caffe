#include "qsl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return qsl::cli::main(argc, argv, std::cout, std::cerr);
}
