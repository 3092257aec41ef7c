#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecoc {

// Entry point behind the ecoc binary; args excludes the program name.
// Exit status contract: 0 = yes / kernel produced / PASS, 1 = proven NO
// or FAIL, 2 = usage, I/O or guard error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecoc
