#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "omegatt/dimset.hpp"
#include "omegatt/globular.hpp"

namespace omegatt {

/// A Batanin tree: an ordered list of subtrees.
struct Tree {
  std::vector<Tree> children;

  Tree() = default;
  explicit Tree(std::vector<Tree> kids) : children(std::move(kids)) {}

  std::size_t arity() const { return children.size(); }
  bool is_leaf() const { return children.empty(); }

  friend bool operator==(Tree const& a, Tree const& b) { return a.children == b.children; }
  friend std::strong_ordering operator<=>(Tree const& a, Tree const& b);
};

/// Bracket literal, e.g. "[[[],[]],[]]".
std::string to_string(Tree const& t);
/// Parses a bracket literal; whitespace is ignored. Throws std::invalid_argument.
Tree parse_tree(std::string_view text);

int dim_tree(Tree const& t);
std::size_t node_count(Tree const& t);

/// Removes every node at distance >= k from the root.
Tree boundary_tree(int k, Tree const& t);

Tree disk_tree(int k);
/// The arity of binary k-composition of an n-cell with an m-cell; requires 0 <= k < min(n, m).
Tree comp_tree(int n, int k, int m);
Tree suspend_tree(Tree const& t);
Tree op_tree(DimSet const& w, Tree const& t);

/// Every tree with between 1 and max_nodes nodes.
std::vector<Tree> enumerate_trees(std::size_t max_nodes);

/// Dimension of a canonical position name: the number of dots in it.
int position_dim(std::string_view position);

/// Name of the top cell of the disk tree D_n.
std::string disk_top_position(int n);

/// The bipointed globular set of positions of a tree.
struct PastingScheme {
  Tree tree;
  BipointedGlobularSet scheme;
};

/// Positions with canonical names: root sectors "0".."n", and "i.p" for a position p of branch i.
/// The result is cached.
PastingScheme const& positions(Tree const& t);

/// Maps positions of boundary_tree(k, t) into positions of t.
CellMap src_inclusion(int k, Tree const& t);
CellMap tgt_inclusion(int k, Tree const& t);

/// The position bijection Pos(op_w t) -> op_w(Pos t); cached.
CellMap const& op_positions_iso(DimSet const& w, Tree const& t);

/// Inverse of a bijective CellMap.
CellMap invert(CellMap const& f);
/// g after f.
CellMap compose_maps(CellMap const& g, CellMap const& f);

}  // namespace omegatt
