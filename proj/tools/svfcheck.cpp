#include <string>
#include <vector>

#include "svfcheck/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return svfcheck::cli::run_cli(args);
}
