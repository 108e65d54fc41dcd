#include "omegatt/metaops.hpp"

#include <mutex>
#include <unordered_map>

namespace omegatt {

namespace {

using Memo = std::unordered_map<Cell::Node const*, Cell>;

std::string const kPrefix = "1.";

Cell suspend_rec(Cell const& c, Memo& memo) {
  if (auto it = memo.find(c.node()); it != memo.end()) return it->second;
  Cell out;
  if (c.is_var()) {
    out = Cell::var(kPrefix + c.name(), c.dim() + 1);
  } else {
    Sphere s{suspend_rec(c.sphere().src, memo), suspend_rec(c.sphere().tgt, memo)};
    Substitution sub;
    sub.emplace(kSuspMinus, Cell::var(kSuspMinus, 0));
    sub.emplace(kSuspPlus, Cell::var(kSuspPlus, 0));
    for (auto const& [p, v] : c.sub()) sub.emplace(kPrefix + p, suspend_rec(v, memo));
    out = Cell::coh(suspend_tree(c.tree()), std::move(s), std::move(sub));
  }
  memo.emplace(c.node(), out);
  return out;
}

}  // namespace

BipointedComputad suspend_computad(Computad const& c) {
  Computad out;
  out.add_generator(kSuspMinus, 0);
  out.add_generator(kSuspPlus, 0);
  for (int d = 0; d <= c.dimension_bound(); ++d) {
    for (auto const& name : c.names(d)) {
      auto const& gen = c.at(name);
      Sphere attach = gen.boundary ? suspend_sphere(*gen.boundary)
                                   : Sphere{Cell::var(kSuspMinus, 0), Cell::var(kSuspPlus, 0)};
      out.add_generator(kPrefix + name, d + 1, std::move(attach));
    }
  }
  return {std::move(out), Cell::var(kSuspMinus, 0), Cell::var(kSuspPlus, 0)};
}

Cell suspend_cell(Cell const& c) {
  Memo memo;
  return suspend_rec(c, memo);
}

Sphere suspend_sphere(Sphere const& s) {
  Memo memo;
  return Sphere{suspend_rec(s.src, memo), suspend_rec(s.tgt, memo)};
}

Substitution suspend_morphism(Substitution const& sigma) {
  Memo memo;
  Substitution out;
  out.emplace(kSuspMinus, Cell::var(kSuspMinus, 0));
  out.emplace(kSuspPlus, Cell::var(kSuspPlus, 0));
  for (auto const& [k, v] : sigma) out.emplace(kPrefix + k, suspend_rec(v, memo));
  return out;
}

NotASuspension::NotASuspension(std::string path, std::string const& detail)
    : std::runtime_error("NotASuspension at " + (path.empty() ? std::string("<root>") : path) + ": " + detail),
      path_(std::move(path)) {}

namespace {

std::string join(std::string const& path, std::string const& step) { return path.empty() ? step : path + "." + step; }

bool is_shifted(std::string const& name) { return name.size() > kPrefix.size() && name.compare(0, 2, kPrefix) == 0; }

Cell desuspend_rec(Cell const& c, std::string const& path) {
  if (c.is_var()) {
    if (c.dim() == 0 || !is_shifted(c.name())) {
      throw NotASuspension(path, "generator '" + c.name() + "' is not a shifted generator");
    }
    return Cell::var(c.name().substr(kPrefix.size()), c.dim() - 1);
  }
  auto const& tree = c.tree();
  if (tree.arity() != 1) {
    throw NotASuspension(join(path, "tree"), "tree " + to_string(tree) + " does not have a single branch");
  }
  auto const& sub = c.sub();
  auto basepoint = [&](char const* pos) {
    auto it = sub.find(pos);
    if (it == sub.end() || !(it->second == Cell::var(pos, 0))) {
      throw NotASuspension(join(path, std::string("sub[") + pos + "]"),
                           std::string("root sector ") + pos + " is not sent to the matching basepoint");
    }
  };
  basepoint(kSuspMinus);
  basepoint(kSuspPlus);
  Sphere s{desuspend_rec(c.sphere().src, join(path, "sphere.src")),
           desuspend_rec(c.sphere().tgt, join(path, "sphere.tgt"))};
  Substitution out;
  for (auto const& [p, v] : sub) {
    if (p == kSuspMinus || p == kSuspPlus) continue;
    if (!is_shifted(p)) throw NotASuspension(join(path, "sub[" + p + "]"), "unexpected position");
    out.emplace(p.substr(kPrefix.size()), desuspend_rec(v, join(path, "sub[" + p + "]")));
  }
  return Cell::coh(tree.children.front(), std::move(s), std::move(out));
}

}  // namespace

Cell desuspend_cell(Cell const& c) { return desuspend_rec(c, ""); }

Sphere desuspend_sphere(Sphere const& s) {
  return Sphere{desuspend_rec(s.src, "src"), desuspend_rec(s.tgt, "tgt")};
}

Computad desuspend_computad(Computad const& c) {
  auto const& points = c.names(0);
  if (points.size() != 2 || !c.has(kSuspMinus) || !c.has(kSuspPlus)) {
    throw NotASuspension("", "expected exactly the 0-generators 0 and 1");
  }
  Computad out;
  for (int d = 1; d <= c.dimension_bound(); ++d) {
    for (auto const& name : c.names(d)) {
      if (!is_shifted(name)) throw NotASuspension(name, "generator is not a shifted generator");
      auto const& attach = *c.at(name).boundary;
      if (d == 1) {
        if (!(attach == Sphere{Cell::var(kSuspMinus, 0), Cell::var(kSuspPlus, 0)})) {
          throw NotASuspension(name, "1-generator is not attached to (0, 1)");
        }
        out.add_generator(name.substr(kPrefix.size()), 0);
      } else {
        out.add_generator(name.substr(kPrefix.size()), d - 1,
                          Sphere{desuspend_rec(attach.src, name + ".src"), desuspend_rec(attach.tgt, name + ".tgt")});
      }
    }
  }
  return out;
}

namespace {

struct OpMemo {
  DimSet w;
  Memo memo;
};

Cell op_rec(OpMemo& m, Cell const& c);

Sphere op_sphere_rec(OpMemo& m, Sphere const& s) {
  if (m.w.contains(s.dim() + 1)) return Sphere{op_rec(m, s.tgt), op_rec(m, s.src)};
  return Sphere{op_rec(m, s.src), op_rec(m, s.tgt)};
}

Cell op_rec(OpMemo& m, Cell const& c) {
  if (c.is_var()) return c;
  if (auto it = m.memo.find(c.node()); it != m.memo.end()) return it->second;
  auto const& tree = c.tree();
  // iso : Pos(op_w B) -> op_w Pos(B), identity on cells of op_w Pos(B) = cells of Pos(B).
  CellMap const& iso = op_positions_iso(m.w, tree);
  auto const& pos = positions(tree).scheme.carrier;
  Substitution back = renaming(invert(iso), pos);
  Sphere sphere = apply_morphism(back, op_sphere_rec(m, c.sphere()));
  Substitution sub;
  for (auto const& [p_op, p] : iso) sub.emplace(p_op, op_rec(m, c.sub().at(p)));
  Cell out = Cell::coh(op_tree(m.w, tree), std::move(sphere), std::move(sub));
  m.memo.emplace(c.node(), out);
  return out;
}

}  // namespace

Computad op_computad(DimSet const& w, Computad const& c) {
  OpMemo m{w, {}};
  Computad out;
  for (int d = 0; d <= c.dimension_bound(); ++d) {
    for (auto const& name : c.names(d)) {
      auto const& gen = c.at(name);
      out.add_generator(name, d, gen.boundary ? std::optional<Sphere>(op_sphere_rec(m, *gen.boundary)) : std::nullopt);
    }
  }
  return out;
}

BipointedComputad op_computad(DimSet const& w, BipointedComputad const& c) {
  if (w.contains(1)) return {op_computad(w, c.computad), c.base_plus, c.base_minus};
  return {op_computad(w, c.computad), c.base_minus, c.base_plus};
}

Cell op_cell(DimSet const& w, Cell const& c) {
  OpMemo m{w, {}};
  return op_rec(m, c);
}

Sphere op_sphere(DimSet const& w, Sphere const& s) {
  OpMemo m{w, {}};
  return op_sphere_rec(m, s);
}

Substitution op_morphism(DimSet const& w, Substitution const& sigma) {
  OpMemo m{w, {}};
  Substitution out;
  for (auto const& [k, v] : sigma) out.emplace(k, op_rec(m, v));
  return out;
}

namespace {

Cell swap_basepoints(Cell const& c, Memo& memo) {
  if (auto it = memo.find(c.node()); it != memo.end()) return it->second;
  Cell out;
  if (c.is_var()) {
    if (c.name() == kSuspMinus) {
      out = Cell::var(kSuspPlus, 0);
    } else if (c.name() == kSuspPlus) {
      out = Cell::var(kSuspMinus, 0);
    } else {
      out = c;
    }
  } else {
    Substitution sub;
    for (auto const& [p, v] : c.sub()) sub.emplace(p, swap_basepoints(v, memo));
    out = Cell::coh(c.tree(), c.sphere(), std::move(sub));
  }
  memo.emplace(c.node(), out);
  return out;
}

}  // namespace

Cell op_susp_iso(DimSet const& w, Cell const& c) {
  if (!w.contains(1)) return c;
  Memo memo;
  return swap_basepoints(c, memo);
}

}  // namespace omegatt
