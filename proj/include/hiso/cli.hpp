// Command dispatch for the hiso tool, kept in the library so tests can drive
// it with string streams. Table arguments resolve corpus keys first, then
// file paths; a "./" prefix always means a path.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hiso/magma.hpp"

namespace hiso {

// Exit codes: 0 success, 1 negative decision, 2 input error, 3 cap exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

// Corpus key or file path, per the precedence rule above.
CayleyTable resolve_table(const std::string& arg);

}  // namespace hiso
