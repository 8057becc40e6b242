#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toeplitz::cli {

// Exit status: 0 success / Member / pass, 1 NotMember / fail, 2 usage or
// validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace toeplitz::cli
