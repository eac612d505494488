// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact; there are no tolerances anywhere.

#include <cstdlib>

#include "gl2/selftest.hpp"

int main() { return gl2::selftest::run_and_print() ? EXIT_SUCCESS : EXIT_FAILURE; }
