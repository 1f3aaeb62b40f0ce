#include <iostream>

#include "chatelet/cli.hpp"

int main(int argc, char** argv) {
    return chatelet::run_cli(argc, argv, std::cout, std::cerr);
}
