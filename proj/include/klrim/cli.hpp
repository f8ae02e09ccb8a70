#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "klrim/verify.hpp"

namespace klrim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line (without the program name). `fault` is passed to
/// every verify_theorem call and exists for testing the verify gate.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        Fault fault = Fault::none);

}  // namespace klrim::cli
