#pragma once

#include <iosfwd>

namespace rigidcert {

// Exit codes: 0 success/property holds, 1 property fails, 2 hypothesis gate,
// 3 retry exhaustion, 4 I/O or parse, 5 inconclusive, 6 internal error.
int run_cli(int argc, const char* const* argv);

// Built-in invariant suite over d <= 3; prints one PASS/FAIL line per check.
int run_selftest(std::ostream& out);

} // namespace rigidcert
