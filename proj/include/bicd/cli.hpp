#pragma once

#include <iosfwd>

namespace bicd {

// Exit status: 0 ok/valid/exists, 1 invalid/not-exists/not-covered,
// 2 usage error, 3 timeout or constructive gap.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bicd
