// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace curlcurl::cli {

// Exit codes: 0 success, 1 verification failures, 2 solver non-convergence,
// 64 usage/config errors, 65 hypothesis gate failures.
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitHypothesis = 65;

int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace curlcurl::cli
