#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "siprox/dense_vector.hpp"

namespace siprox::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDegenerate = 3 };

/// Parses "a,b,c" into a vector. Throws std::invalid_argument on empty
/// fields, trailing characters or non-finite values.
DenseVector parse_vector(const std::string& text);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace siprox::cli
