#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maass/complex_branch.hpp"

namespace maass::cli {

/// Runs the command line `maass <args...>` (args exclude the program name).
/// Returns 0 when everything passes, 1 on an identity failure and 2 on a
/// usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.2+0.3i", "-0.35i", "i", "5.5". Throws std::invalid_argument.
cplx parse_complex(const std::string& s);

/// Evaluation grid: "list:z1,z2,..." or "x0:x1:nx[,y0:y1:ny]" for the points
/// x + iy of a rectangular grid (y defaults to 0).
std::vector<cplx> parse_grid(const std::string& spec);

}  // namespace maass::cli
