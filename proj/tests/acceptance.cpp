#include <iostream>
#include <string>

#include "knotlib/verify.hpp"

int main(int argc, char** argv) {
    knotlib::verify::Options opt;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--data" && i + 1 < argc) opt.data_dir = argv[++i];
        if (a == "--seed" && i + 1 < argc) opt.seed = std::stoul(argv[++i]);
    }
    bool ok = knotlib::verify::run_all(opt, std::cout);
    return ok ? 0 : 1;
}
