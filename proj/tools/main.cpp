#include <iostream>

#include "markovcast/commands.hpp"

int main(int argc, char** argv) {
    return markovcast::run_cli(argc, argv, std::cout, std::cerr);
}
