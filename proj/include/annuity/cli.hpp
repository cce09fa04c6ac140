#ifndef ANNUITY_CLI_HPP
#define ANNUITY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace annuity::cli {

// Dispatches one subcommand. Returns 0 on success, 1 on data/validation
// errors, 2 on argument errors. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace annuity::cli

#endif
