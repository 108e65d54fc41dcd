#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace omegatt {

struct LawOptions {
  /// Trees with at most this many nodes are enumerated.
  std::size_t max_nodes = 5;
  /// Opposites range over all w contained in {1, ..., dims_upto}.
  int dims_upto = 3;
};

struct LawResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// The first few failing instances.
  std::vector<std::string> samples;
  double seconds = 0;
};

struct LawReport {
  std::vector<LawResult> laws;

  std::size_t checks() const;
  std::size_t failures() const;
};

/// Names of every law, in run order.
std::vector<std::string> law_names();

/// Runs the laws whose name starts with `filter` (all of them when empty).
LawReport run_laws(LawOptions const& options, std::string const& filter = "",
                   std::function<void(LawResult const&)> const& on_done = {});

}  // namespace omegatt
