#pragma once

#include <string>
#include <vector>

namespace boilerfdd {

// Entry point behind the binary: args excludes the program name.
// Exit status: 0 success, 2 usage/configuration errors, 1 everything else.
int dispatch(const std::vector<std::string>& args);

}  // namespace boilerfdd
