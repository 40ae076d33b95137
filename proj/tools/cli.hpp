#pragma once

#include <iosfwd>

namespace walkpart {

// Exit status: 0 ok, 1 usage error, 2 domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walkpart
