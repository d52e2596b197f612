#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schur/construct.hpp"
#include "schur/core.hpp"

namespace schur::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

/// Entry point of the `schur` tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable verdict followed by one line per violation or coverage defect.
std::string describe(const VerificationReport& report, Element n, std::size_t r);

/// Fixed-width table of per-stage order ratios.
std::string ratio_table(const std::vector<GrowthRatio>& ratios);

}  // namespace schur::cli
