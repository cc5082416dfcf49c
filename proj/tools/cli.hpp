#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "relfact/partition.hpp"

namespace relfact::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kMalformedInput = 2,
  kInvalidInput = 3,
  kVerificationMismatch = 4,
};

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string subcommand;
  std::filesystem::path input;
  std::string route;  // empty = default for the input kind
  std::size_t n = 0;
  OrderVariant order = OrderVariant::Canonical;
  std::size_t jobs = 1;  // 0 = auto
  std::size_t enumeration_bound = 0;
  std::vector<std::string> boundary;
  bool verify = false;
  bool timing = false;
  OutputFormat output = OutputFormat::Json;
};

/// Runs one invocation; args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default enumeration bound, honouring RELFACT_BOUND when set.
std::size_t default_bound();

}  // namespace relfact::cli
