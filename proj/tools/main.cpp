#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return inckk::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
