#include "omegatt/globular.hpp"

#include <numeric>
#include <stdexcept>

namespace omegatt {

namespace {

std::set<CellId> const kNoCells;

bool has_prefix(CellId const& id, std::string const& prefix) {
  return id.size() > prefix.size() && id.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

void GlobularSet::add_point(CellId const& id) {
  if (contains(id)) throw std::invalid_argument("duplicate cell '" + id + "'");
  if (cells_.empty()) cells_.emplace_back();
  cells_[0].insert(id);
  dim_[id] = 0;
}

void GlobularSet::add_cell(CellId const& id, int dim, CellId const& src, CellId const& tgt) {
  if (dim == 0) {
    add_point(id);
    return;
  }
  if (contains(id)) throw std::invalid_argument("duplicate cell '" + id + "'");
  if (!contains(src) || dim_of(src) != dim - 1 || !contains(tgt) || dim_of(tgt) != dim - 1) {
    throw std::invalid_argument("cell '" + id + "' has a missing or misdimensioned boundary");
  }
  if (static_cast<int>(cells_.size()) <= dim) cells_.resize(dim + 1);
  cells_[dim].insert(id);
  dim_[id] = dim;
  src_[id] = src;
  tgt_[id] = tgt;
}

int GlobularSet::dim_of(CellId const& id) const {
  auto it = dim_.find(id);
  if (it == dim_.end()) throw std::out_of_range("no cell '" + id + "'");
  return it->second;
}

CellId const& GlobularSet::src(CellId const& id) const {
  auto it = src_.find(id);
  if (it == src_.end()) throw std::out_of_range("cell '" + id + "' has no source");
  return it->second;
}

CellId const& GlobularSet::tgt(CellId const& id) const {
  auto it = tgt_.find(id);
  if (it == tgt_.end()) throw std::out_of_range("cell '" + id + "' has no target");
  return it->second;
}

CellId GlobularSet::src_k(CellId const& id, int k) const {
  CellId cur = id;
  while (dim_of(cur) > k) cur = src(cur);
  return cur;
}

CellId GlobularSet::tgt_k(CellId const& id, int k) const {
  CellId cur = id;
  while (dim_of(cur) > k) cur = tgt(cur);
  return cur;
}

std::set<CellId> const& GlobularSet::cells(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(cells_.size())) return kNoCells;
  return cells_[dim];
}

std::vector<std::size_t> GlobularSet::counts() const {
  std::vector<std::size_t> out;
  for (auto const& layer : cells_) out.push_back(layer.size());
  return out;
}

void GlobularSet::validate() const {
  for (auto const& [id, d] : dim_) {
    if (d < 2) continue;
    if (src(src(id)) != src(tgt(id)) || tgt(src(id)) != tgt(tgt(id))) {
      throw std::logic_error("globularity fails at cell '" + id + "'");
    }
  }
}

bool BipointedGlobularSet::in_suspension_form() const {
  if (base_minus != "0" || base_plus != "1") return false;
  for (int d = 0; d <= carrier.dimension_bound(); ++d) {
    for (auto const& id : carrier.cells(d)) {
      if (d == 0) {
        if (id != "0" && id != "1") return false;
      } else if (!has_prefix(id, "1.")) {
        return false;
      }
    }
  }
  return true;
}

GlobularSet disk(int n) {
  if (n < 0) throw std::invalid_argument("disk: negative dimension");
  GlobularSet out;
  out.add_point("0");
  for (int i = 0; i < n; ++i) out = suspend_glob(out).carrier;
  return out;
}

BipointedGlobularSet wedge(std::vector<BipointedGlobularSet> const& parts) {
  std::size_t const n = parts.size();
  // Junction j sits between part j and part j+1; a part with equal basepoints fuses two junctions.
  std::vector<std::size_t> rep(n + 1);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](std::size_t j) {
    while (rep[j] != j) j = rep[j];
    return j;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (parts[i].base_minus == parts[i].base_plus) {
      auto a = find(i), b = find(i + 1);
      rep[std::max(a, b)] = std::min(a, b);
    }
  }
  auto junction = [&](std::size_t j) { return std::to_string(find(j)); };

  GlobularSet out;
  for (std::size_t j = 0; j <= n; ++j) {
    if (find(j) == j) out.add_point(std::to_string(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto const& part = parts[i];
    bool const suspended = part.in_suspension_form();
    std::string const tag = std::to_string(i + 1) + ".";
    auto rename = [&](CellId const& id) -> CellId {
      if (id == part.base_minus) return junction(i);
      if (id == part.base_plus) return junction(i + 1);
      return tag + (suspended ? id.substr(2) : id);
    };
    auto const& x = part.carrier;
    for (int d = 0; d <= x.dimension_bound(); ++d) {
      for (auto const& id : x.cells(d)) {
        if (id == part.base_minus || id == part.base_plus) continue;
        if (d == 0) {
          out.add_point(rename(id));
        } else {
          out.add_cell(rename(id), d, rename(x.src(id)), rename(x.tgt(id)));
        }
      }
    }
  }
  return {std::move(out), junction(0), junction(n)};
}

BipointedGlobularSet suspend_glob(GlobularSet const& x) {
  GlobularSet out;
  out.add_point("0");
  out.add_point("1");
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      if (d == 0) {
        out.add_cell("1." + id, 1, "0", "1");
      } else {
        out.add_cell("1." + id, d + 1, "1." + x.src(id), "1." + x.tgt(id));
      }
    }
  }
  return {std::move(out), "0", "1"};
}

GlobularSet hom_glob(BipointedGlobularSet const& x) {
  bool const strip = x.in_suspension_form();
  auto rename = [&](CellId const& id) { return strip ? id.substr(2) : id; };
  auto const& g = x.carrier;
  GlobularSet out;
  for (int d = 1; d <= g.dimension_bound(); ++d) {
    for (auto const& id : g.cells(d)) {
      if (g.src_k(id, 0) != x.base_minus || g.tgt_k(id, 0) != x.base_plus) continue;
      if (d == 1) {
        out.add_point(rename(id));
      } else {
        out.add_cell(rename(id), d - 1, rename(g.src(id)), rename(g.tgt(id)));
      }
    }
  }
  return out;
}

GlobularSet op_glob(DimSet const& w, GlobularSet const& x) {
  GlobularSet out;
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      if (d == 0) {
        out.add_point(id);
      } else if (w.contains(d)) {
        out.add_cell(id, d, x.tgt(id), x.src(id));
      } else {
        out.add_cell(id, d, x.src(id), x.tgt(id));
      }
    }
  }
  return out;
}

BipointedGlobularSet op_glob(DimSet const& w, BipointedGlobularSet const& x) {
  if (w.contains(1)) return {op_glob(w, x.carrier), x.base_plus, x.base_minus};
  return {op_glob(w, x.carrier), x.base_minus, x.base_plus};
}

bool is_globular_morphism(CellMap const& f, GlobularSet const& x, GlobularSet const& y) {
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      auto it = f.find(id);
      if (it == f.end() || !y.contains(it->second) || y.dim_of(it->second) != d) return false;
      if (d == 0) continue;
      auto const& image = it->second;
      auto s = f.find(x.src(id));
      auto t = f.find(x.tgt(id));
      if (s == f.end() || t == f.end()) return false;
      if (y.src(image) != s->second || y.tgt(image) != t->second) return false;
    }
  }
  return true;
}

GlobularSet rename_cells(GlobularSet const& x, CellMap const& f) {
  auto at = [&](CellId const& id) {
    auto it = f.find(id);
    if (it == f.end()) throw std::out_of_range("rename_cells: no image for '" + id + "'");
    return it->second;
  };
  GlobularSet out;
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      if (d == 0) {
        out.add_point(at(id));
      } else {
        out.add_cell(at(id), d, at(x.src(id)), at(x.tgt(id)));
      }
    }
  }
  return out;
}

}  // namespace omegatt
