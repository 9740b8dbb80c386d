#pragma once

#include <cstdint>
#include <string>

#include "tqdh/problem.hpp"

namespace tqdh {

/// Process exit codes shared by the C API and the command line.
enum ExitCode : int { kOk = 0, kUsage = 2, kValidation = 3, kMismatch = 4, kInternal = 5 };

struct CommandResult {
  int status = kOk;
  Json report;
};

CommandResult cmd_check_extension(const ProblemSpec& spec);
CommandResult cmd_pbw_check(const ProblemSpec& spec, const Json& kappa_doc, bool ambiguities);
/// method is "direct", "cohomology" or "both".
CommandResult cmd_parameter_space(const ProblemSpec& spec, const std::string& method);
CommandResult cmd_constant_cocycles(const ProblemSpec& spec);
CommandResult cmd_classify_diagonal(const ProblemSpec& spec);
CommandResult cmd_classify_symmetric(int n, bool twisted);
CommandResult cmd_alpha_table(const ProblemSpec& spec);
/// Spin-cover cocycle on S_n, elements written as 1-based image arrays.
CommandResult cmd_alpha_table_symmetric(int n);
CommandResult cmd_verify_cover(int n, long samples, std::uint64_t seed);
CommandResult cmd_selftest(long samples, std::uint64_t seed);

}  // namespace tqdh
