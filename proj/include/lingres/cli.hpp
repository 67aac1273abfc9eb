#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "lingres/resolution.hpp"

namespace lingres::cli {

enum class Format { Text, Json, Dot };

enum ExitCode : int {
  kRefuted = 0,
  kSaturated = 1,
  kInputError = 2,
  kResourceLimit = 3,
  kOracleDisagreement = 4,
};

/// Unset optionals fall back to the problem file's `option:` lines, then to
/// the built-in defaults.
struct RunConfig {
  std::string input;
  std::optional<Strategy> strategy;
  std::optional<MergeMode> merge;
  std::optional<std::size_t> max_steps;
  Format format = Format::Text;
  bool check_oracle = false;
  std::size_t max_interpretations = 200'000;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lingres::cli
