#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pert::cli {

/// Exit codes: 0 success, 1 domain outcome (not realisable, on a wall,
/// verification failed, budget exceeded), 2 usage, I/O or invalid input.
/// Errors are written to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace pert::cli
