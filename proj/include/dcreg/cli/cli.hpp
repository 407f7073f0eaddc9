#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcreg::cli {

// Exit codes: 0 ok, 1 parse or input error, 2 a Fail verdict (check) or a
// failed census flag, 3 only Inconclusive results (check).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcreg::cli
