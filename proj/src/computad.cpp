#include "omegatt/computad.hpp"

#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace omegatt {

void Computad::add_generator(std::string const& name, int dim, std::optional<Sphere> boundary) {
  if (name.empty()) throw std::invalid_argument("generator with an empty name");
  if (has(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
  if (dim < 0) throw std::invalid_argument("generator '" + name + "' has negative dimension");
  if ((dim == 0) != !boundary.has_value()) {
    throw std::invalid_argument("generator '" + name + "': boundary present iff dimension >= 1");
  }
  if (boundary && boundary->dim() != dim - 1) {
    throw std::invalid_argument("generator '" + name + "': boundary has the wrong dimension");
  }
  if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
  by_dim_[dim].push_back(name);
  gens_.emplace(name, Generator{name, dim, std::move(boundary)});
}

Generator const& Computad::at(std::string const& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw std::out_of_range("no generator '" + name + "'");
  return it->second;
}

std::vector<std::string> const& Computad::names(int dim) const {
  static std::vector<std::string> const none;
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[dim];
}

Cell Computad::var(std::string const& name) const { return Cell::var(name, at(name).dim); }

Computad free_computad(GlobularSet const& x) {
  Computad out;
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      if (d == 0) {
        out.add_generator(id, 0);
      } else {
        out.add_generator(id, d, Sphere{Cell::var(x.src(id), d - 1), Cell::var(x.tgt(id), d - 1)});
      }
    }
  }
  return out;
}

std::shared_ptr<Computad const> free_positions(Tree const& t) {
  static std::mutex mu;
  static std::map<Tree, std::shared_ptr<Computad const>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[t];
  if (!slot) slot = std::make_shared<Computad const>(free_computad(positions(t).scheme.carrier));
  return slot;
}

Substitution identity_substitution(Tree const& t) {
  Substitution out;
  auto const& x = positions(t).scheme.carrier;
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) out.emplace(id, Cell::var(id, d));
  }
  return out;
}

namespace {

using Memo = std::unordered_map<Cell::Node const*, Cell>;

Cell apply_rec(Substitution const& sigma, Cell const& cell, Memo& memo) {
  if (auto it = memo.find(cell.node()); it != memo.end()) return it->second;
  Cell out;
  if (cell.is_var()) {
    auto it = sigma.find(cell.name());
    if (it == sigma.end()) throw std::out_of_range("morphism has no binding for generator '" + cell.name() + "'");
    out = it->second;
  } else {
    Substitution sub;
    for (auto const& [p, v] : cell.sub()) sub.emplace_hint(sub.end(), p, apply_rec(sigma, v, memo));
    out = Cell::coh(cell.tree(), cell.sphere(), std::move(sub));
  }
  memo.emplace(cell.node(), out);
  return out;
}

// Coherence boundaries do not depend on the ambient computad, so they are cached globally.
// The cache keeps each key cell alive, so node addresses are never reused.
struct BoundaryCache {
  std::mutex mu;
  std::unordered_map<Cell::Node const*, std::pair<Cell, Sphere>> entries;
};

BoundaryCache& boundary_cache() {
  static BoundaryCache cache;
  return cache;
}

}  // namespace

Cell apply_morphism(Substitution const& sigma, Cell const& cell) {
  Memo memo;
  return apply_rec(sigma, cell, memo);
}

Sphere apply_morphism(Substitution const& sigma, Sphere const& sphere) {
  Memo memo;
  return Sphere{apply_rec(sigma, sphere.src, memo), apply_rec(sigma, sphere.tgt, memo)};
}

Substitution compose_substitutions(Substitution const& sigma, Substitution const& tau) {
  Memo memo;
  Substitution out;
  for (auto const& [p, v] : tau) out.emplace_hint(out.end(), p, apply_rec(sigma, v, memo));
  return out;
}

Substitution renaming(CellMap const& f, GlobularSet const& domain) {
  Substitution out;
  for (auto const& [from, to] : f) out.emplace(from, Cell::var(to, domain.dim_of(from)));
  return out;
}

Sphere cell_boundary(Computad const& c, Cell const& cell) {
  if (cell.dim() == 0) throw std::invalid_argument("0-cells have no boundary");
  if (cell.is_var()) {
    auto const& gen = c.at(cell.name());
    if (!gen.boundary) throw std::invalid_argument("generator '" + cell.name() + "' has no boundary");
    return *gen.boundary;
  }
  auto& cache = boundary_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.entries.find(cell.node()); it != cache.entries.end()) return it->second.second;
  }
  Sphere out = apply_morphism(cell.sub(), cell.sphere());
  std::lock_guard lock(cache.mu);
  cache.entries.emplace(cell.node(), std::make_pair(cell, out));
  return out;
}

Cell src_k(Computad const& c, Cell const& cell, int k) {
  Cell cur = cell;
  while (cur.dim() > k) cur = cell_boundary(c, cur).src;
  return cur;
}

Cell tgt_k(Computad const& c, Cell const& cell, int k) {
  Cell cur = cell;
  while (cur.dim() > k) cur = cell_boundary(c, cur).tgt;
  return cur;
}

namespace {

void support_rec(Computad const& c, Cell const& cell, std::set<std::string>& out,
                 std::unordered_set<Cell::Node const*>& seen) {
  if (!seen.insert(cell.node()).second) return;
  if (cell.is_var()) {
    out.insert(cell.name());
    auto const& gen = c.at(cell.name());
    if (gen.boundary) {
      support_rec(c, gen.boundary->src, out, seen);
      support_rec(c, gen.boundary->tgt, out, seen);
    }
    return;
  }
  for (auto const& [_, v] : cell.sub()) support_rec(c, v, out, seen);
}

std::set<std::string> image_of(CellMap const& f) {
  std::set<std::string> out;
  for (auto const& [_, v] : f) out.insert(v);
  return out;
}

}  // namespace

std::set<std::string> support(Computad const& c, Cell const& cell) {
  std::set<std::string> out;
  std::unordered_set<Cell::Node const*> seen;
  support_rec(c, cell, out, seen);
  return out;
}

bool is_full(Tree const& tree, Sphere const& sphere) {
  int const n = sphere.dim();
  if (sphere.tgt.dim() != n) {
    throw TypeError(TypeErrorKind::DimensionMismatch, "sphere", "source and target dimensions differ");
  }
  if (dim_tree(tree) > n + 1) {
    throw TypeError(TypeErrorKind::DimensionMismatch, "sphere",
                    "tree " + to_string(tree) + " is too high for a " + std::to_string(n) + "-sphere");
  }
  auto const ambient = free_positions(tree);
  return support(*ambient, sphere.src) == image_of(src_inclusion(n, tree)) &&
         support(*ambient, sphere.tgt) == image_of(tgt_inclusion(n, tree));
}

std::string to_string(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::UnknownGenerator: return "UnknownGenerator";
    case TypeErrorKind::DimensionMismatch: return "DimensionMismatch";
    case TypeErrorKind::NotParallel: return "NotParallel";
    case TypeErrorKind::NotFull: return "NotFull";
    case TypeErrorKind::BadSubstitution: return "BadSubstitution";
  }
  return "?";
}

TypeError::TypeError(TypeErrorKind kind, std::string path, std::string const& detail)
    : std::runtime_error(to_string(kind) + " at " + (path.empty() ? std::string("<root>") : path) + ": " + detail),
      kind_(kind),
      path_(std::move(path)) {}

namespace {

std::string join(std::string const& path, std::string const& step) { return path.empty() ? step : path + "." + step; }

class Checker {
 public:
  void cell(Computad const& c, Cell const& x, std::string const& path) {
    auto key = std::make_pair(&c, x.node());
    if (done_.count(key)) return;
    if (x.is_var()) {
      if (!c.has(x.name())) {
        throw TypeError(TypeErrorKind::UnknownGenerator, path, "no generator '" + x.name() + "'");
      }
      if (c.at(x.name()).dim != x.dim()) {
        throw TypeError(TypeErrorKind::DimensionMismatch, path,
                        "generator '" + x.name() + "' has dimension " + std::to_string(c.at(x.name()).dim) +
                            ", used at " + std::to_string(x.dim()));
      }
    } else {
      coherence(c, x, path);
    }
    done_.insert(key);
  }

  void sphere(Computad const& c, Sphere const& s, std::string const& path) {
    cell(c, s.src, join(path, "src"));
    cell(c, s.tgt, join(path, "tgt"));
    if (s.src.dim() != s.tgt.dim()) {
      throw TypeError(TypeErrorKind::DimensionMismatch, path, "source and target dimensions differ");
    }
    if (s.dim() >= 1 && !(cell_boundary(c, s.src) == cell_boundary(c, s.tgt))) {
      throw TypeError(TypeErrorKind::NotParallel, path, "source and target are not parallel");
    }
  }

  void substitution(Computad const& c, GlobularSet const& domain, Substitution const& sigma, std::string const& path) {
    for (auto const& [p, _] : sigma) {
      if (!domain.contains(p)) throw TypeError(TypeErrorKind::BadSubstitution, path, "unexpected binding for '" + p + "'");
    }
    for (int d = 0; d <= domain.dimension_bound(); ++d) {
      for (auto const& p : domain.cells(d)) {
        auto const where = path + "[" + p + "]";
        auto it = sigma.find(p);
        if (it == sigma.end()) throw TypeError(TypeErrorKind::BadSubstitution, path, "no binding for '" + p + "'");
        auto const& v = it->second;
        cell(c, v, where);
        if (v.dim() != d) {
          throw TypeError(TypeErrorKind::DimensionMismatch, where,
                          "expected a " + std::to_string(d) + "-cell, got dimension " + std::to_string(v.dim()));
        }
        if (d == 0) continue;
        Sphere const expected{sigma.at(domain.src(p)), sigma.at(domain.tgt(p))};
        if (!(cell_boundary(c, v) == expected)) {
          throw TypeError(TypeErrorKind::BadSubstitution, where, "boundary does not match the images of src/tgt");
        }
      }
    }
  }

  void morphism(Computad const& domain, Computad const& codomain, Substitution const& sigma, std::string const& path) {
    for (auto const& [g, _] : sigma) {
      if (!domain.has(g)) throw TypeError(TypeErrorKind::BadSubstitution, path, "unexpected binding for '" + g + "'");
    }
    for (int d = 0; d <= domain.dimension_bound(); ++d) {
      for (auto const& g : domain.names(d)) {
        auto const where = path + "[" + g + "]";
        auto it = sigma.find(g);
        if (it == sigma.end()) throw TypeError(TypeErrorKind::BadSubstitution, path, "no binding for '" + g + "'");
        cell(codomain, it->second, where);
        if (it->second.dim() != d) throw TypeError(TypeErrorKind::DimensionMismatch, where, "dimension mismatch");
        if (d == 0) continue;
        auto const& attach = *domain.at(g).boundary;
        if (!(cell_boundary(codomain, it->second) == apply_morphism(sigma, attach))) {
          throw TypeError(TypeErrorKind::BadSubstitution, where, "boundary does not match the image of the attachment");
        }
      }
    }
  }

 private:
  void coherence(Computad const& c, Cell const& x, std::string const& path) {
    auto const& tree = x.tree();
    if (dim_tree(tree) > x.dim()) {
      throw TypeError(TypeErrorKind::DimensionMismatch, join(path, "tree"),
                      "tree " + to_string(tree) + " has dimension above " + std::to_string(x.dim()));
    }
    auto const ambient = free_positions(tree);
    keep_.push_back(ambient);
    sphere(*ambient, x.sphere(), join(path, "sphere"));
    if (!is_full(tree, x.sphere())) {
      throw TypeError(TypeErrorKind::NotFull, join(path, "sphere"),
                      "sphere " + print_sphere(x.sphere()) + " is not full over " + to_string(tree));
    }
    substitution(c, positions(tree).scheme.carrier, x.sub(), join(path, "sub"));
  }

  struct KeyHash {
    std::size_t operator()(std::pair<Computad const*, Cell::Node const*> const& k) const {
      return std::hash<void const*>()(k.first) * 31 + std::hash<void const*>()(k.second);
    }
  };
  std::unordered_set<std::pair<Computad const*, Cell::Node const*>, KeyHash> done_;
  std::vector<std::shared_ptr<Computad const>> keep_;
};

template <typename F>
std::optional<TypeError> capture(F&& f) {
  try {
    f();
  } catch (TypeError const& e) {
    return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<TypeError> typecheck_cell(Computad const& c, Cell const& cell) {
  return capture([&] { Checker().cell(c, cell, ""); });
}

std::optional<TypeError> typecheck_sphere(Computad const& c, Sphere const& sphere) {
  return capture([&] { Checker().sphere(c, sphere, ""); });
}

std::optional<TypeError> typecheck_computad(Computad const& c) {
  return capture([&] {
    Checker checker;
    Computad lower;
    for (int d = 0; d <= c.dimension_bound(); ++d) {
      for (auto const& name : c.names(d)) {
        auto const& gen = c.at(name);
        if (gen.boundary) checker.sphere(lower, *gen.boundary, name);
      }
      // Attachments of (d+1)-generators only see generators of dimension <= d.
      Computad next;
      for (int e = 0; e <= d; ++e) {
        for (auto const& name : c.names(e)) next.add_generator(name, e, c.at(name).boundary);
      }
      lower = std::move(next);
    }
  });
}

std::optional<TypeError> typecheck_substitution(Computad const& c, GlobularSet const& domain,
                                                Substitution const& sigma) {
  return capture([&] { Checker().substitution(c, domain, sigma, "sub"); });
}

std::optional<TypeError> typecheck_morphism(Computad const& domain, Computad const& codomain,
                                            Substitution const& sigma) {
  return capture([&] { Checker().morphism(domain, codomain, sigma, "morphism"); });
}

void check_cell(Computad const& c, Cell const& cell) {
  if (auto err = typecheck_cell(c, cell)) throw *err;
}

Cell CellEnvironment::quote(Cell const& cell) const {
  auto name = "{" + print_cell(cell) + "}";
  if (!shape.contains(name)) throw std::invalid_argument("cell is not in the environment: " + print_cell(cell));
  return Cell::var(std::move(name), cell.dim());
}

CellEnvironment cell_environment(Computad const& c, std::vector<Cell> const& cells) {
  // Close under boundaries, then add bottom-up.
  std::map<std::string, Cell> all;
  std::vector<Cell> todo(cells);
  while (!todo.empty()) {
    Cell x = todo.back();
    todo.pop_back();
    auto key = "{" + print_cell(x) + "}";
    if (all.count(key)) continue;
    all.emplace(key, x);
    if (x.dim() > 0) {
      auto b = cell_boundary(c, x);
      todo.push_back(b.src);
      todo.push_back(b.tgt);
    }
  }
  CellEnvironment env;
  int top = 0;
  for (auto const& [_, x] : all) top = std::max(top, x.dim());
  for (int d = 0; d <= top; ++d) {
    for (auto const& [key, x] : all) {
      if (x.dim() != d) continue;
      if (d == 0) {
        env.shape.add_point(key);
      } else {
        auto b = cell_boundary(c, x);
        env.shape.add_cell(key, d, "{" + print_cell(b.src) + "}", "{" + print_cell(b.tgt) + "}");
      }
      env.cells.emplace(key, x);
    }
  }
  return env;
}

Cell counit_eval(CellEnvironment const& env, Cell const& double_cell) {
  Substitution eval;
  for (auto const& [key, x] : env.cells) eval.emplace(key, x);
  try {
    return apply_morphism(eval, double_cell);
  } catch (std::out_of_range const& e) {
    throw std::invalid_argument(std::string("ill-formed double cell: ") + e.what());
  }
}

}  // namespace omegatt
