#pragma once

#include <iosfwd>

namespace cathybrid {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Subcommands: state, wigner, quadrature, moments, entangle, sweep, search.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cathybrid
