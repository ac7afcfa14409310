#pragma once

#include <ostream>

namespace permgauge::cli {

// Subcommands build, fusion, compare and check. Returns 0 on success, 1 for
// mathematical failures and 2 for usage errors; errors go to err as JSON.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permgauge::cli
