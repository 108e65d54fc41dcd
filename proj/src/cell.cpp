#include "omegatt/cell.hpp"

#include <stdexcept>

namespace omegatt {

Cell Cell::var(std::string name, int dim) {
  auto node = std::make_shared<Node>();
  node->dim = dim;
  node->is_var = true;
  node->name = std::move(name);
  return Cell(std::move(node));
}

Cell Cell::coh(Tree tree, Sphere sphere, Substitution sub) {
  if (!sphere.src.valid() || !sphere.tgt.valid()) throw std::invalid_argument("coh: empty sphere");
  auto node = std::make_shared<Node>();
  node->dim = sphere.dim() + 1;
  node->is_var = false;
  int depth = std::max(sphere.src.depth(), sphere.tgt.depth());
  for (auto const& [_, c] : sub) depth = std::max(depth, c.depth());
  node->depth = depth + 1;
  node->tree = std::move(tree);
  node->sphere = std::move(sphere);
  node->sub = std::move(sub);
  return Cell(std::move(node));
}

bool Cell::is_var() const { return node_->is_var; }
int Cell::dim() const { return node_->dim; }
int Cell::depth() const { return node_->depth; }

std::string const& Cell::name() const {
  if (!node_->is_var) throw std::logic_error("name() on a coherence cell");
  return node_->name;
}

Tree const& Cell::tree() const {
  if (node_->is_var) throw std::logic_error("tree() on a generator cell");
  return node_->tree;
}

Sphere const& Cell::sphere() const {
  if (node_->is_var) throw std::logic_error("sphere() on a generator cell");
  return node_->sphere;
}

Substitution const& Cell::sub() const {
  if (node_->is_var) throw std::logic_error("sub() on a generator cell");
  return node_->sub;
}

bool operator==(Cell const& a, Cell const& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  auto const& x = *a.node_;
  auto const& y = *b.node_;
  if (x.dim != y.dim || x.is_var != y.is_var || x.depth != y.depth) return false;
  if (x.is_var) return x.name == y.name;
  return x.tree == y.tree && x.sphere == y.sphere && x.sub == y.sub;
}

}  // namespace omegatt

namespace omegatt {

namespace {

void print_into(Cell const& c, std::string& out) {
  if (c.is_var()) {
    out += c.name();
    return;
  }
  out += "coh ";
  out += to_string(c.tree());
  out += " { ";
  print_into(c.sphere().src, out);
  out += " -> ";
  print_into(c.sphere().tgt, out);
  out += " } [";
  bool first = true;
  for (auto const& [p, v] : c.sub()) {
    out += first ? " " : ", ";
    out += p;
    out += " => ";
    print_into(v, out);
    first = false;
  }
  out += first ? "]" : " ]";
}

}  // namespace

std::string print_cell(Cell const& c) {
  std::string out;
  print_into(c, out);
  return out;
}

std::string print_sphere(Sphere const& s) { return print_cell(s.src) + " -> " + print_cell(s.tgt); }

}  // namespace omegatt
