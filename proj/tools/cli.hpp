#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace herbidyn::cli {

// Full command-line entry point. Exit codes: 0 success, 2 usage error,
// 3 numerical failure.
int run(int argc, const char* const* argv);

// Names accepted by the reproduce subcommand.
std::vector<std::string> reproduce_targets();

// Writes the data files plus a plot script for one preset into out_dir;
// returns the paths written.
std::vector<std::string> reproduce(const std::string& target,
                                   const std::string& out_dir,
                                   std::uint64_t seed, int threads);

}  // namespace herbidyn::cli
