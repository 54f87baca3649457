#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordspace::cli {

/// Runs the chordspace tool on command-line arguments (program name
/// excluded). Normal output goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on usage errors, 2 on data errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chordspace::cli
