// Runs the full acceptance suite and prints one pass/fail line per
// criterion.  Exit status is the number of failed criteria.

#include <cstdlib>
#include <iostream>

#include "pseudou/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240817;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto results = pseudou::acceptance::run_all(seed);
  return pseudou::acceptance::report(results, std::cout);
}
