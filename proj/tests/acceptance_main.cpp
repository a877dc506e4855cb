#include <chrono>
#include <iostream>

#include "qpulse/acceptance.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto results = qpulse::run_acceptance();
  std::cout << qpulse::format_report(results);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = qpulse::all_passed(results);
  std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << " (" << secs << " s)\n";
  return ok ? 0 : 1;
}
