#pragma once

#include <memory>
#include <string>
#include <vector>

#include "omegatt/computad.hpp"

namespace omegatt {

/// A cell together with the computad it lives over.
struct CorpusCell {
  std::string label;
  Cell cell;
  std::shared_ptr<Computad const> ambient;
};

/// comp_cell(n, k, m) for all 1 <= n, m <= max_dim, over their pasting computads.
std::vector<CorpusCell> comp_template_corpus(int max_dim);

/// Cells of C_eh grown from x, a, b by identities and binary composites, keeping depth <= 3
/// and dimension <= 3. Round 1 closes {x, a, b}; round 2 closes round 1; round 3 adds
/// identities of round 2 and composites of round-2 cells with a and b.
std::vector<Cell> eh_corpus();

/// Loop cells of eh_corpus() (every positive-dimensional cell, as C_eh has one object).
std::vector<Cell> eh_loop_corpus();

/// The mixed corpus used by the law harness. It holds the comp templates with their
/// identities, plus shallow C_eh cells with their suspensions.
std::vector<CorpusCell> law_corpus(int max_dim);

}  // namespace omegatt

namespace omegatt {

/// Cells of the free computad on an environment of C_eh cells, for the counit squares.
struct DoubleCellCorpus {
  CellEnvironment env;
  std::shared_ptr<Computad const> free;
  std::vector<Cell> cells;
};

DoubleCellCorpus eh_double_cells();

}  // namespace omegatt
