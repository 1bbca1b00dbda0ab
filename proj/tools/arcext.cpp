#include "uca/cli.hpp"

int main(int argc, char** argv) {
    return uca::run_cli(argc, argv, std::cout, std::cerr);
}
