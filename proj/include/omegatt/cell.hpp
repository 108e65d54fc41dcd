#pragma once

#include <map>
#include <memory>
#include <string>

#include "omegatt/tree.hpp"

namespace omegatt {

struct Sphere;

/// A cell of the free weak omega-category on a computad: either a generator or a
/// coherence coh{B}{A}{tau}. Cells are immutable and compare structurally.
class Cell {
 public:
  struct Node;

  Cell() = default;

  static Cell var(std::string name, int dim);
  /// The dimension is sphere dimension + 1. No validation happens here; see typecheck_cell.
  static Cell coh(Tree tree, Sphere sphere, std::map<std::string, Cell> sub);

  bool valid() const { return node_ != nullptr; }
  bool is_var() const;
  bool is_coh() const { return !is_var(); }
  int dim() const;

  std::string const& name() const;
  Tree const& tree() const;
  Sphere const& sphere() const;
  std::map<std::string, Cell> const& sub() const;

  /// Number of nested coherence constructors (0 for a generator).
  int depth() const;

  Node const* node() const { return node_.get(); }

  friend bool operator==(Cell const& a, Cell const& b);

 private:
  explicit Cell(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
  std::shared_ptr<Node const> node_;
};

/// A pair of parallel n-cells (the boundary of an (n+1)-cell).
struct Sphere {
  Cell src;
  Cell tgt;

  int dim() const { return src.dim(); }
  friend bool operator==(Sphere const& a, Sphere const& b) { return a.src == b.src && a.tgt == b.tgt; }
};

/// Position-keyed assignment out of a pasting scheme, or generator-keyed morphism of computads.
using Substitution = std::map<std::string, Cell>;

struct Cell::Node {
  int dim = 0;
  bool is_var = true;
  std::string name;
  Tree tree;
  Sphere sphere;
  Substitution sub;
  int depth = 0;
};

}  // namespace omegatt

namespace omegatt {

/// Canonical surface rendering of a cell, e.g. "coh [[],[]] { 0 -> 2 } [ 0 => x, ... ]".
/// Generators print as their name.
std::string print_cell(Cell const& c);
std::string print_sphere(Sphere const& s);

}  // namespace omegatt
