// The `isg` command line, callable in-process.

#ifndef INVSG_CLI_HPP_
#define INVSG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace invsg {

//! Exit codes.
inline constexpr int exit_ok              = 0;
inline constexpr int exit_check_failed    = 1;
inline constexpr int exit_malformed_input = 2;
inline constexpr int exit_bound_exceeded  = 3;
inline constexpr int exit_internal_error  = 4;

//! \p args excludes the program name. "-" as a file name means \p in or
//! \p out.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace invsg

#endif  // INVSG_CLI_HPP_
