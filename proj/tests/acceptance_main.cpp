// Runs the acceptance suite through the same code path as the selftest verb:
// one PASS/FAIL line per criterion, exit 0 only when every criterion passes.
#include <iostream>

#include "rigidtrace/cli.hpp"

int main() { return rigidtrace::cli_run({"selftest"}, std::cout, std::cerr); }
