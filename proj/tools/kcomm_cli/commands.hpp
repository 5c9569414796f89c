#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcomm/kzero.hpp"
#include "kcomm_cli/job.hpp"

namespace kcomm::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kVerificationFailure = 2 };

struct RunOptions {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
};

struct CommandResult {
  std::string output;  // always newline-terminated
  int exit_code = kSuccess;
};

/// Raised when a command cannot run on the given job (wrong arity, missing
/// tilde lines, unknown command). Maps to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& command_names();

CommandResult run_command(std::string_view command, const JobDescription& job, const RunOptions& options = {});

/// {field, nvars, dim, class: [{generators, degree, multiplicity}]}
nlohmann::ordered_json class_to_json(const GrothendieckClass& c, std::size_t dim);
/// Inverse of class_to_json; re-validates every key as a reduced basis.
GrothendieckClass class_from_json(const nlohmann::ordered_json& j);

}  // namespace kcomm::cli
