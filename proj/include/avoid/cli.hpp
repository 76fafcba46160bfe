#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avoid {

// Exit codes: 0 success (avoided / certified / matched), 1 negative outcome
// (occurrence found / refuted / mismatch), 2 usage or input error, 3 node
// budget exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoid
