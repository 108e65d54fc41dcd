#include "omegatt/corpus.hpp"

#include <set>

#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"

namespace omegatt {

std::vector<CorpusCell> comp_template_corpus(int max_dim) {
  std::vector<CorpusCell> out;
  for (int n = 1; n <= max_dim; ++n) {
    for (int m = 1; m <= max_dim; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        Cell c = comp_cell(n, k, m);
        out.push_back({"comp(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + ")", c,
                       free_positions(c.tree())});
      }
    }
  }
  return out;
}

namespace {

constexpr int kMaxDepth = 3;
constexpr int kMaxDim = 3;

struct Pool {
  Computad const& ambient;
  std::vector<Cell> cells;
  std::set<std::string> seen;

  void add(Cell const& c) {
    if (c.depth() > kMaxDepth || c.dim() > kMaxDim) return;
    if (seen.insert(print_cell(c)).second) cells.push_back(c);
  }

  void add_identities(std::vector<Cell> const& from) {
    for (auto const& c : from) {
      if (c.dim() < kMaxDim && c.depth() < kMaxDepth) add(identity_cell(ambient, c));
    }
  }

  void add_composites(std::vector<Cell> const& lhs, std::vector<Cell> const& rhs) {
    for (auto const& l : lhs) {
      for (auto const& r : rhs) {
        if (l.depth() >= kMaxDepth || r.depth() >= kMaxDepth) continue;
        for (int k = 0; k < std::min(l.dim(), r.dim()); ++k) {
          if (!(tgt_k(ambient, l, k) == src_k(ambient, r, k))) continue;
          add(compose(ambient, l, k, r));
        }
      }
    }
  }
};

}  // namespace

std::vector<Cell> eh_corpus() {
  static std::vector<Cell> const cached = [] {
    auto const eh = eh_computad();
    auto const& c = eh.computad;
    Pool pool{c, {}, {}};
    std::vector<Cell> const base{c.var("x"), c.var("a"), c.var("b")};
    for (auto const& g : base) pool.add(g);
    auto round = [&](std::vector<Cell> const& from) {
      pool.add_identities(from);
      pool.add_composites(from, from);
    };
    round(base);
    auto const round1 = pool.cells;
    round(round1);
    auto const round2 = pool.cells;
    pool.add_identities(round2);
    std::vector<Cell> const scalars{c.var("a"), c.var("b")};
    pool.add_composites(round2, scalars);
    pool.add_composites(scalars, round2);
    return pool.cells;
  }();
  return cached;
}

std::vector<Cell> eh_loop_corpus() {
  std::vector<Cell> out;
  for (auto const& c : eh_corpus()) {
    if (c.dim() >= 1) out.push_back(c);
  }
  return out;
}

std::vector<CorpusCell> law_corpus(int max_dim) {
  auto out = comp_template_corpus(max_dim);
  std::size_t const templates = out.size();
  for (std::size_t i = 0; i < templates; ++i) {
    auto const t = out[i];
    out.push_back({"id(" + t.label + ")", identity_cell(*t.ambient, t.cell), t.ambient});
  }
  auto const eh = std::make_shared<Computad const>(eh_computad().computad);
  auto const seh = std::make_shared<Computad const>(suspend_computad(*eh).computad);
  std::size_t idx = 0;
  for (auto const& c : eh_corpus()) {
    if (c.depth() > 2) continue;
    out.push_back({"eh#" + std::to_string(idx), c, eh});
    out.push_back({"susp(eh#" + std::to_string(idx) + ")", suspend_cell(c), seh});
    ++idx;
  }
  return out;
}

DoubleCellCorpus eh_double_cells() {
  auto const eh = eh_computad();
  auto const& c = eh.computad;
  Cell const a = c.var("a");
  Cell const b = c.var("b");
  std::vector<Cell> seeds{a, b, identity_cell(c, c.var("x")), compose(c, a, 0, b), compose(c, a, 1, b),
                          compose(c, b, 1, a)};
  DoubleCellCorpus out;
  out.env = cell_environment(c, seeds);
  out.free = std::make_shared<Computad const>(free_computad(out.env.shape));
  Pool pool{*out.free, {}, {}};
  std::vector<Cell> quoted;
  for (auto const& s : seeds) quoted.push_back(out.env.quote(s));
  for (auto const& q : quoted) pool.add(q);
  pool.add_identities(quoted);
  pool.add_composites(quoted, quoted);
  out.cells = pool.cells;
  return out;
}

}  // namespace omegatt
