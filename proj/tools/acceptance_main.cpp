#include "monad/acceptance.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    monad::AcceptanceOptions o;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--quick")) o.quick = true;
        else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) o.seed = std::strtoull(argv[++i], nullptr, 10);
        else {
            std::cerr << "usage: acceptance [--quick] [--seed N]\n";
            return 2;
        }
    }
    auto rep = monad::run_acceptance(o);
    std::cout << rep.str();
    return rep.all_pass() ? 0 : 1;
}
