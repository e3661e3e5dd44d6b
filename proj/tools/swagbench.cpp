#include <swag/bench/experiment.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return swag::bench::cli_main(argc, argv, std::cout, std::cerr);
}
