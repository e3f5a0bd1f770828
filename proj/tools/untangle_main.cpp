#include <iostream>

#include "untangle/cli.hpp"

int main(int argc, char** argv) {
    return untangle::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
