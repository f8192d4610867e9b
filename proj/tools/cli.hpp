// Copyright 2026 The ormt Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef ORMT_TOOLS_CLI_HPP_
#define ORMT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace ormt::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // property fails, rule violated, instantiation error
inline constexpr int kInputError = 2;  // unreadable or malformed input
inline constexpr int kResourceCap = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Directories searched for built-in schemes, in order.
std::vector<std::string> scheme_dirs();

}  // namespace ormt::cli

#endif  // ORMT_TOOLS_CLI_HPP_
