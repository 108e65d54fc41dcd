#pragma once

// Reference computations written independently of the library's constructions.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "omegatt/computad.hpp"
#include "omegatt/globular.hpp"
#include "omegatt/tree.hpp"

namespace oracle {

// Cell counts of disk(n) glued to disk(m) along the k-target of the first and k-source of
// the second, computed by union-find over the disjoint union.
inline std::vector<int> pushout_counts(int n, int k, int m) {
  // A disk cell is (dim, side) with side 0 = source, 1 = target, 2 = top.
  struct C {
    int part, dim, side;
  };
  std::vector<C> cells;
  auto add_disk = [&](int part, int top) {
    for (int d = 0; d < top; ++d) {
      cells.push_back({part, d, 0});
      cells.push_back({part, d, 1});
    }
    cells.push_back({part, top, 2});
  };
  add_disk(0, n);
  add_disk(1, m);
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](int part, int dim, int side) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].part == part && cells[i].dim == dim && cells[i].side == side) return i;
    }
    return cells.size();
  };
  // The k-boundary of a disk consists of both j-cells for j < k and one k-cell.
  auto kcell = [&](int part, int top, int side) { return k == top ? index(part, k, 2) : index(part, k, side); };
  for (int j = 0; j < k; ++j) {
    for (int side = 0; side < 2; ++side) parent[find(index(0, j, side))] = find(index(1, j, side));
  }
  parent[find(kcell(0, n, 1))] = find(kcell(1, m, 0));
  std::vector<std::set<std::size_t>> classes(std::max(n, m) + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) classes[cells[i].dim].insert(find(i));
  std::vector<int> out;
  for (auto const& c : classes) out.push_back(static_cast<int>(c.size()));
  return out;
}

// Truncates a bracket literal, keeping nodes at distance <= k from the root.
inline std::string boundary_literal(std::string const& tree, int k) {
  std::string out;
  int depth = 0;
  for (char ch : tree) {
    if (ch == '[') {
      if (depth <= k) out += ch;
      ++depth;
    } else if (ch == ']') {
      --depth;
      if (depth <= k) out += ch;
    } else if (ch == ',' && depth <= k) {
      // A comma at nesting depth d separates nodes at distance d.
      out += ch;
    }
  }
  return out;
}

// Positions of dimension d: one sector more than the number of children, summed over
// the nodes at distance d.
inline std::vector<std::size_t> position_counts(omegatt::Tree const& t) {
  std::vector<std::size_t> out;
  std::vector<omegatt::Tree const*> level{&t};
  while (!level.empty()) {
    std::size_t count = 0;
    std::vector<omegatt::Tree const*> next;
    for (auto const* node : level) {
      count += node->children.size() + 1;
      for (auto const& c : node->children) next.push_back(&c);
    }
    out.push_back(count);
    level = std::move(next);
  }
  return out;
}

// Reverses the children of every node at distance d - 1 for each d in w.
inline omegatt::Tree op_tree(std::set<int> const& w, omegatt::Tree const& t, int distance = 0) {
  omegatt::Tree out;
  for (auto const& c : t.children) out.children.push_back(op_tree(w, c, distance + 1));
  if (w.count(distance + 1)) std::reverse(out.children.begin(), out.children.end());
  return out;
}

// f : X -> Y preserves dimension and commutes with the boundary maps.
inline bool is_morphism(omegatt::CellMap const& f, omegatt::GlobularSet const& x, omegatt::GlobularSet const& y) {
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& c : x.cells(d)) {
      auto it = f.find(c);
      if (it == f.end() || !y.contains(it->second) || y.dim_of(it->second) != d) return false;
      if (d > 0 && (f.at(x.src(c)) != y.src(it->second) || f.at(x.tgt(c)) != y.tgt(it->second))) return false;
    }
  }
  return true;
}

// Unmemoized support, following the recursive clauses literally.
inline std::set<std::string> support(omegatt::Computad const& c, omegatt::Cell const& cell) {
  std::set<std::string> out;
  if (cell.is_var()) {
    out.insert(cell.name());
    if (auto const& b = c.at(cell.name()).boundary) {
      for (auto const& s : {oracle::support(c, b->src), oracle::support(c, b->tgt)}) out.insert(s.begin(), s.end());
    }
    return out;
  }
  for (auto const& [_, v] : cell.sub()) {
    auto s = oracle::support(c, v);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// Boundary of a cell by the two defining clauses, with no caching.
inline omegatt::Sphere boundary(omegatt::Computad const& c, omegatt::Cell const& cell) {
  if (cell.is_var()) return *c.at(cell.name()).boundary;
  return omegatt::apply_morphism(cell.sub(), cell.sphere());
}

}  // namespace oracle
