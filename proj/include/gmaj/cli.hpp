#pragma once

namespace gmaj {

// Full command-line surface (check / scan / matrix / spectrum). Returns the
// process exit code: 0 for any decided verdict, 3 for UNDECIDED, 2 for
// domain errors, CLI11's codes for usage errors.
int run_cli(int argc, const char* const* argv);

}  // namespace gmaj
