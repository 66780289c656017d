#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordlab::cli {

// Exit codes: 64 usage, 66 file error, 70 proof contradiction; the lemma2 and
// classify subcommands additionally encode their outcome (see README).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordlab::cli
