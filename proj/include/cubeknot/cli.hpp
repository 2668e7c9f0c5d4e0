#pragma once

#include <iosfwd>

namespace cubeknot {

/// Exit codes: 0 success, 1 validation failure or negative result, 2 usage
/// or I/O error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cubeknot
