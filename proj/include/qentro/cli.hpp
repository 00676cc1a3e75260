#pragma once

#include <iosfwd>

namespace qentro {

// Entry point behind the qentro binary. Exit codes: 0 success,
// 1 validation or inequality failure, 2 input/usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qentro
