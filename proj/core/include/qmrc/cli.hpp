#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmrc::cli {

// Full command-line front end.  Subcommands:
//   expand <expr> [--order N] [--out FILE]
//   bracket --f <expr> --g <expr> --n N [--k K --s S --l L --t T]
//   verify <ramanujan|niebur|vdp|chazy|prop-dern|all> [--nmax N]
//   decompose <expr>
//   solve-coeffs --k K --s S --l L --t T --n N
//   wz [--max-N N]
//   tau [--max-n N]
// Exit code 0 on success / all checks passing, 1 when a verification fails,
// 2 on usage, syntax, or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// argv[0] is the program name, as in main().
int run(int argc, const char* const* argv);

}  // namespace qmrc::cli
