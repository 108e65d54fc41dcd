#include "omegatt/homcat.hpp"

#include "omegatt/metaops.hpp"

namespace omegatt {

std::string hom_generator_name(Cell const& underlying) { return "{" + print_cell(underlying) + "}"; }

Cell hom_generator(Cell const& underlying) { return Cell::var(hom_generator_name(underlying), underlying.dim() - 1); }

bool is_loop_cell(BipointedComputad const& c, Cell const& cell) {
  if (cell.dim() < 1) return false;
  return src_k(c.computad, cell, 0) == c.base_minus && tgt_k(c.computad, cell, 0) == c.base_plus;
}

namespace {

void require_loop(BipointedComputad const& c, Cell const& cell) {
  if (!is_loop_cell(c, cell)) throw std::invalid_argument("not a loop cell: " + print_cell(cell));
}

// Root-sector test plus desuspension of the sphere; nothing about the ambient is needed.
std::optional<Sphere> suspension_shape(BipointedComputad const& c, Cell const& cell) {
  if (!cell.is_coh() || cell.tree().arity() != 1) return std::nullopt;
  auto const& sub = cell.sub();
  if (!(sub.at("0") == c.base_minus) || !(sub.at("1") == c.base_plus)) return std::nullopt;
  try {
    return desuspend_sphere(cell.sphere());
  } catch (NotASuspension const&) {
    return std::nullopt;
  }
}

HomCell factor_rec(BipointedComputad const& c, Cell const& cell) {
  auto shape = suspension_shape(c, cell);
  if (!shape) return HomCell{hom_generator(cell), {{hom_generator_name(cell), cell}}};
  Tree const& inner = cell.tree().children.front();
  if (!is_full(inner, *shape)) {
    throw DesuspendedNotFull("desuspended sphere " + print_sphere(*shape) + " is not full over " + to_string(inner));
  }
  HomCell out;
  Substitution sub;
  for (auto const& [p, v] : cell.sub()) {
    if (p == "0" || p == "1") continue;
    auto part = factor_rec(c, v);
    out.generators.insert(part.generators.begin(), part.generators.end());
    sub.emplace(p.substr(2), std::move(part.term));
  }
  out.term = Cell::coh(inner, std::move(*shape), std::move(sub));
  return out;
}

Cell realize_rec(BipointedComputad const& c, HomCell const& h, Cell const& term) {
  if (term.is_var()) {
    auto it = h.generators.find(term.name());
    if (it == h.generators.end()) throw std::invalid_argument("unknown hom generator " + term.name());
    return it->second;
  }
  Substitution sub;
  sub.emplace("0", c.base_minus);
  sub.emplace("1", c.base_plus);
  for (auto const& [p, v] : term.sub()) sub.emplace("1." + p, realize_rec(c, h, v));
  return Cell::coh(suspend_tree(term.tree()), suspend_sphere(term.sphere()), std::move(sub));
}

Cell rename_generators(Cell const& term, std::map<std::string, std::string> const& names) {
  if (term.is_var()) {
    auto it = names.find(term.name());
    return it == names.end() ? term : Cell::var(it->second, term.dim());
  }
  Substitution sub;
  for (auto const& [p, v] : term.sub()) sub.emplace(p, rename_generators(v, names));
  return Cell::coh(term.tree(), term.sphere(), std::move(sub));
}

}  // namespace

bool is_indecomposable(BipointedComputad const& c, Cell const& cell) {
  require_loop(c, cell);
  return !suspension_shape(c, cell).has_value();
}

HomCell hom_factor(BipointedComputad const& c, Cell const& cell) {
  require_loop(c, cell);
  return factor_rec(c, cell);
}

Cell hom_realize(BipointedComputad const& c, HomCell const& h) { return realize_rec(c, h, h.term); }

Computad hom_computad_fragment(BipointedComputad const& c, HomCell const& h) {
  std::map<std::string, Cell> all;
  std::vector<Cell> todo;
  for (auto const& [_, u] : h.generators) todo.push_back(u);
  while (!todo.empty()) {
    Cell u = todo.back();
    todo.pop_back();
    if (!all.emplace(hom_generator_name(u), u).second || u.dim() < 2) continue;
    auto b = cell_boundary(c.computad, u);
    for (auto const& side : {b.src, b.tgt}) {
      for (auto const& [_, g] : factor_rec(c, side).generators) todo.push_back(g);
    }
  }
  Computad out;
  int top = 0;
  for (auto const& [_, u] : all) top = std::max(top, u.dim());
  for (int d = 1; d <= top; ++d) {
    for (auto const& [name, u] : all) {
      if (u.dim() != d) continue;
      if (d == 1) {
        out.add_generator(name, 0);
      } else {
        auto b = cell_boundary(c.computad, u);
        out.add_generator(name, d - 1, Sphere{factor_rec(c, b.src).term, factor_rec(c, b.tgt).term});
      }
    }
  }
  return out;
}

TransportVerdict op_hom_transport(DimSet const& w, BipointedComputad const& c, Cell const& cell) {
  require_loop(c, cell);
  auto const opc = op_computad(w, c);
  auto const lhs = hom_factor(opc, op_cell(w, cell));
  auto const rhs_raw = hom_factor(c, cell);
  std::map<std::string, std::string> names;
  for (auto const& [name, u] : rhs_raw.generators) names.emplace(name, hom_generator_name(op_cell(w, u)));
  Cell const rhs = op_cell(w.shifted_down(), rename_generators(rhs_raw.term, names));
  TransportVerdict verdict;
  verdict.equal = lhs.term == rhs;
  if (!verdict.equal) {
    verdict.lhs = print_cell(lhs.term);
    verdict.rhs = print_cell(rhs);
  }
  return verdict;
}

}  // namespace omegatt
