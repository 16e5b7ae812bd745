#ifndef SYMSQ_CLI_HPP
#define SYMSQ_CLI_HPP

#include <string>
#include <vector>

namespace symsq::cli {

// Dispatches one invocation. Exit code 0 on success, 1 when a verification
// ran and missed its tolerance, 2 on usage or I/O errors.
int run(const std::vector<std::string>& args);

} // namespace symsq::cli

#endif
