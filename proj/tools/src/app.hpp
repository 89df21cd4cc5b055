#pragma once

#include <iosfwd>

namespace orbitkit::cli {

// Runs the orbitkit command line. Returns the process exit code: 0 on
// success, 1 on failed checks or runtime errors, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitkit::cli
