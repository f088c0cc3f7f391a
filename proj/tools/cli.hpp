#ifndef FREEJACOBI_CLI_HPP
#define FREEJACOBI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fj::cli {

// Exit codes: 0 success, 1 usage error, 2 validation failure.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fj::cli

#endif
