#include "omegatt/oplib.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace omegatt {

namespace {

Cell var_at(Tree const& t, std::string const& position) {
  return Cell::var(position, positions(t).scheme.carrier.dim_of(position));
}

Cell build_comp(int n, int k, int m);

// Image of comp_{lower} under the source or target inclusion of the (top-1)-boundary.
Cell transport(Tree const& tree, int top, Cell const& lower, bool target) {
  auto const incl = target ? tgt_inclusion(top - 1, tree) : src_inclusion(top - 1, tree);
  auto const& domain = positions(boundary_tree(top - 1, tree)).scheme.carrier;
  return apply_morphism(renaming(incl, domain), lower);
}

Cell build_comp(int n, int k, int m) {
  Tree const tree = comp_tree(n, k, m);
  if (n == k + 1 && m == k + 1) {
    // The sphere is the top cell of the k-disk pushed along both inclusions.
    auto const top = disk_top_position(k);
    Sphere s{var_at(tree, src_inclusion(k, tree).at(top)), var_at(tree, tgt_inclusion(k, tree).at(top))};
    return Cell::coh(tree, std::move(s), identity_substitution(tree));
  }
  int const top = std::max(n, m);
  int const n1 = std::min(n, top - 1);
  int const m1 = std::min(m, top - 1);
  if (!(boundary_tree(top - 1, tree) == comp_tree(n1, k, m1))) {
    throw std::logic_error("comp_cell: boundary of " + to_string(tree) + " is not the lower composition tree");
  }
  Cell const lower = comp_cell(n1, k, m1);
  Sphere s{transport(tree, top, lower, false), transport(tree, top, lower, true)};
  return Cell::coh(tree, std::move(s), identity_substitution(tree));
}

std::string iterate_prefix(int j) {
  std::string out;
  for (int i = 0; i < j; ++i) out += "1.";
  return out;
}

}  // namespace

Cell comp_cell(int n, int k, int m) {
  comp_tree(n, k, m);  // validates (n, k, m)
  static std::recursive_mutex mu;
  static std::map<std::tuple<int, int, int>, Cell> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(n, k, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Cell out = build_comp(n, k, m);
  cache.emplace(key, out);
  return out;
}

Substitution disk_map(Computad const& c, Cell const& cell) {
  int const n = cell.dim();
  Substitution out;
  for (int j = 0; j < n; ++j) {
    out.emplace(iterate_prefix(j) + "0", src_k(c, cell, j));
    out.emplace(iterate_prefix(j) + "1", tgt_k(c, cell, j));
  }
  out.emplace(disk_top_position(n), cell);
  return out;
}

Cell identity_cell(Computad const& c, Cell const& cell) {
  check_cell(c, cell);
  int const n = cell.dim();
  Tree const tree = disk_tree(n);
  auto const top = var_at(tree, disk_top_position(n));
  return Cell::coh(tree, Sphere{top, top}, disk_map(c, cell));
}

Cell compose(Computad const& c, Cell const& lhs, int k, Cell const& rhs) {
  int const n = lhs.dim();
  int const m = rhs.dim();
  if (k < 0 || k >= std::min(n, m)) {
    throw BoundaryMismatch("cannot " + std::to_string(k) + "-compose cells of dimensions " + std::to_string(n) +
                           " and " + std::to_string(m));
  }
  if (!(tgt_k(c, lhs, k) == src_k(c, rhs, k))) {
    throw BoundaryMismatch("the " + std::to_string(k) + "-target of the left cell is not the " + std::to_string(k) +
                           "-source of the right cell");
  }
  auto const left = disk_map(c, lhs);
  auto const right = disk_map(c, rhs);
  std::string const pre = iterate_prefix(k);
  Substitution tau;
  auto bind = [&](std::string const& pos, Cell const& value) {
    auto [it, fresh] = tau.emplace(pos, value);
    if (!fresh && !(it->second == value)) throw BoundaryMismatch("conflicting images at position " + pos);
  };
  // Positions of the two disks below the gluing level coincide.
  for (auto const& [p, v] : left) {
    if (p.compare(0, pre.size(), pre) != 0 || position_dim(p) < k) {
      bind(p, v);
      continue;
    }
    auto rest = p.substr(pre.size());
    bind(pre + rest, v);
  }
  for (auto const& [p, v] : right) {
    if (p.compare(0, pre.size(), pre) != 0 || position_dim(p) < k) {
      bind(p, v);
      continue;
    }
    auto rest = p.substr(pre.size());
    if (rest == "0") {
      bind(pre + "1", v);
    } else if (rest == "1") {
      bind(pre + "2", v);
    } else {
      bind(pre + "2" + rest.substr(1), v);
    }
  }
  return apply_morphism(tau, comp_cell(n, k, m));
}

BipointedComputad eh_computad() {
  Computad c;
  c.add_generator("x", 0);
  Cell const x = c.var("x");
  Cell const idx = identity_cell(c, x);
  c.add_generator("a", 2, Sphere{idx, idx});
  c.add_generator("b", 2, Sphere{idx, idx});
  return {std::move(c), x, x};
}

}  // namespace omegatt
