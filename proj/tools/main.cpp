#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "compavoid/query.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    if (!args.empty() && args[0] == "--batch") {
        if (args.size() != 2) {
            std::cerr << "error: --batch takes exactly one file argument\n";
            return compavoid::kExitUsage;
        }
        std::ifstream file(args[1]);
        if (!file) {
            std::cerr << "error: cannot open batch file \"" << args[1] << "\"\n";
            return compavoid::kExitUsage;
        }
        return compavoid::run_batch(file, std::cout, std::cerr);
    }

    return compavoid::run_args(args, std::cout, std::cerr);
}
