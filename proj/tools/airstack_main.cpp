#include "airstack/cli/runner.hpp"

int main(int argc, char** argv) {
    return airstack::cli::run_cli(argc, argv);
}
