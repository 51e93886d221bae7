#include <iostream>
#include <string>
#include <vector>

#include "reinhardt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    reinhardt::Report report = reinhardt::run_command(args);
    std::cout << report.rendered();
    if (!report.diagnostics.empty()) std::cerr << report.diagnostics;
    return report.exitCode;
}
