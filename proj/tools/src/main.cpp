#include <iostream>

#include "sfx/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sfx::cli::run(args, std::cout, std::cerr, sfx::cli::environment_from_process());
}
