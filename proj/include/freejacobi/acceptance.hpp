#ifndef FREEJACOBI_ACCEPTANCE_HPP
#define FREEJACOBI_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>

namespace fj::acceptance {

constexpr int kCriterionCount = 13;

std::string title(int criterion);

// Runs one criterion (1..13) and prints one PASS/FAIL line plus detail lines
// prefixed with "  ". Returns true on pass.
bool run(int criterion, std::ostream& os, int threads = 0);
// Runs all criteria; returns the number of failures.
int run_all(std::ostream& os, int threads = 0);

}  // namespace fj::acceptance

#endif
