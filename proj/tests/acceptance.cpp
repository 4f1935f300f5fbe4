// Acceptance suite driver: one PASS/FAIL line per criterion, nonzero exit
// on any failure.  The same registry backs the CLI selftest command.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "bigcenter/criteria.hpp"

int main(int argc, char** argv) {
    std::optional<int> only;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = bigcenter::run_acceptance(std::cout, only);
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    return 0;
}
