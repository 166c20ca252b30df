#include <cstdlib>
#include <iostream>
#include <string>

#include "quadric/acceptance.hpp"

// With no argument runs every criterion; otherwise only the listed ids.
int main(int argc, char** argv) {
    bool ok = true;
    auto run = [&](int id) {
        const quadric::CriterionResult r = quadric::run_criterion(id);
        quadric::print_result(std::cout, r);
        ok = ok && r.passed;
    };
    if (argc == 1) {
        for (int id = 1; id <= quadric::kCriterionCount; ++id)
            run(id);
    } else {
        for (int i = 1; i < argc; ++i)
            run(std::atoi(argv[i]));
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
