#include <vector>

#include "qredux/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qredux::cli::run(args);
}
