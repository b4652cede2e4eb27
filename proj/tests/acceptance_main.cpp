// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [id ...]   (default: all ten)
#include "nccr/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int i = 1; i <= nccr::acceptance::kCriterionCount; ++i) ids.push_back(i);
  }
  bool all = true;
  for (int id : ids) {
    const auto r = nccr::acceptance::run_criterion(id);
    std::cout << nccr::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
