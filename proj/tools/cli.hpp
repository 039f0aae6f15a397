#pragma once

#include <iosfwd>

namespace rdv::cli {

/// Entry point of the `rdvmatch` tool. Exit codes: 0 success, 1 invalid
/// instance or failed crosscheck, 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rdv::cli
