#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ringhelm/params.hpp"

namespace ringhelm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kNotConverged = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Random configuration with 1.2 <= omega <= 5, 0.5 <= |gamma| <= 8, m <= 4, R = 1, Z = 0.
RingConfig moderate_config(std::mt19937_64& rng);

}  // namespace ringhelm::cli
