// Acceptance run: one pass/fail line per criterion. Criteria 1-6 run in
// process; criterion 7 runs the CLI's verify-paper and checks its exit code.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "stretchkit/suite.hpp"

#ifndef STRETCHKIT_CLI
#error "STRETCHKIT_CLI must name the stretchkit executable"
#endif

int main() {
  stretchkit::SuiteOptions options;
  bool ok = true;
  for (const auto& result : stretchkit::run_suite(options)) {
    stretchkit::print_criterion(std::cout, result);
    std::cout.flush();
    ok = ok && result.pass;
  }

  const std::string command = std::string("\"") + STRETCHKIT_CLI + "\" verify-paper > /dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(command.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool cli_ok = status == 0;
  char line[160];
  std::snprintf(line, sizeof line, "criterion 7: %s  verify-paper exits 0  (exit status %d, %.2fs)\n",
                cli_ok ? "PASS" : "FAIL", status, seconds);
  std::cout << line;
  ok = ok && cli_ok;

  std::cout << (ok ? "acceptance: all 7 criteria pass" : "acceptance: FAILED") << std::endl;
  return ok ? 0 : 1;
}
