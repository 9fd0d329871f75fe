#pragma once

#include <iosfwd>

namespace swaprobust {

// Exit codes: 0 ok, 1 check failed, 2 parse/usage error, 3 feasibility cap refused.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swaprobust
