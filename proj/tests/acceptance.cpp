// Runs acceptance criteria 1-11 and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria (capped at 1).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "conjlang/acceptance/criteria.hpp"

int main(int argc, char** argv) {
  using namespace conjlang;
  std::vector<int> ids = criterion_ids();
  if (argc > 1) {
    ids.clear();
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  }
  int failed = 0;
  for (int id : ids) {
    auto start = std::chrono::steady_clock::now();
    auto r = run_criterion(id);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << format_result(r) << " [" << static_cast<int>(secs * 10) / 10.0 << "s]" << std::endl;
    failed += !r.pass;
  }
  std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
