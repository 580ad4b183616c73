#pragma once

#include <string>
#include <vector>

#include "lapgraph/io.hpp"

namespace lapgraph {

struct VerifyOptions {
  /// Largest cover in the growth check; 0 picks 64 for d = 1 and 8 for d = 2.
  long max_cover = 0;
  long fibers = 1024;
  double growth_tolerance = 0.05;
};

struct Check {
  enum class Status { kPass, kFail, kSkip };
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool ok() const;
};

/// Replays every identity applicable to the file's rank and planarity.
VerifyReport run_verify(const GraphFile& file, const VerifyOptions& options = {});

std::string to_string(Check::Status status);

}  // namespace lapgraph
