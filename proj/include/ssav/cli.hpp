#pragma once

#include <iosfwd>

namespace ssav {

/// Entry point of the `ssav` tool. Returns 0 on success, 1 on a library
/// domain error or a failed verification, 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssav
