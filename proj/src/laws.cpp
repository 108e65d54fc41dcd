#include "omegatt/laws.hpp"

#include <chrono>
#include <set>

#include "omegatt/corpus.hpp"
#include "omegatt/homcat.hpp"
#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"

namespace omegatt {

std::size_t LawReport::checks() const {
  std::size_t n = 0;
  for (auto const& l : laws) n += l.checks;
  return n;
}

std::size_t LawReport::failures() const {
  std::size_t n = 0;
  for (auto const& l : laws) n += l.failures;
  return n;
}

namespace {

constexpr std::size_t kMaxSamples = 3;

class Recorder {
 public:
  explicit Recorder(LawResult& r) : r_(r) {}

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++r_.checks;
    if (ok) return;
    ++r_.failures;
    if (r_.samples.size() < kMaxSamples) r_.samples.push_back(describe());
  }

 private:
  LawResult& r_;
};

struct Context {
  LawOptions options;
  std::vector<Tree> trees;
  std::vector<DimSet> subsets;
  std::vector<CorpusCell> corpus;
};

using Law = std::function<void(Context const&, Recorder&)>;

std::string tag(Tree const& t, DimSet const& w) { return to_string(t) + " w=" + w.to_string(); }

// ---- trees and globular sets

void tree_op_boundary(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    for (auto const& w : cx.subsets) {
      for (int k = 0; k <= dim_tree(t) + 1; ++k) {
        rec.check(op_tree(w, boundary_tree(k, t)) == boundary_tree(k, op_tree(w, t)),
                  [&] { return tag(t, w) + " k=" + std::to_string(k); });
      }
    }
  }
}

void tree_op_inclusions(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    for (auto const& w : cx.subsets) {
      Tree const opt = op_tree(w, t);
      for (int k = 0; k <= dim_tree(t); ++k) {
        Tree const bd = boundary_tree(k, t);
        auto const& iso_b = op_positions_iso(w, t);
        auto const& iso_bd = op_positions_iso(w, bd);
        bool const swapped = w.contains(k + 1);
        auto const s = src_inclusion(k, t);
        auto const tt = tgt_inclusion(k, t);
        auto const lhs_s = compose_maps(swapped ? tt : s, iso_bd);
        auto const lhs_t = compose_maps(swapped ? s : tt, iso_bd);
        rec.check(lhs_s == compose_maps(iso_b, src_inclusion(k, opt)),
                  [&] { return tag(t, w) + " k=" + std::to_string(k) + " (source)"; });
        rec.check(lhs_t == compose_maps(iso_b, tgt_inclusion(k, opt)),
                  [&] { return tag(t, w) + " k=" + std::to_string(k) + " (target)"; });
      }
    }
  }
}

void tree_op_action(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    rec.check(op_tree(DimSet{}, t) == t, [&] { return to_string(t) + " op_empty"; });
    for (auto const& w : cx.subsets) {
      for (auto const& v : cx.subsets) {
        rec.check(op_tree(w, op_tree(v, t)) == op_tree(w.symmetric_difference(v), t),
                  [&] { return tag(t, w) + " v=" + v.to_string(); });
      }
    }
  }
}

void tree_iso_morphism(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    for (auto const& w : cx.subsets) {
      auto const& iso = op_positions_iso(w, t);
      auto const& from = positions(op_tree(w, t)).scheme;
      auto const to = op_glob(w, positions(t).scheme);
      bool ok = is_globular_morphism(iso, from.carrier, to.carrier) && iso.size() == to.carrier.size() &&
                invert(iso).size() == iso.size() && iso.at(from.base_minus) == to.base_minus &&
                iso.at(from.base_plus) == to.base_plus;
      rec.check(ok, [&] { return tag(t, w); });
    }
  }
}

void tree_iso_composite(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    rec.check(op_positions_iso(DimSet{}, t) == compose_maps(op_positions_iso(DimSet{}, t), op_positions_iso(DimSet{}, t)),
              [&] { return to_string(t) + " identity"; });
    for (auto const& w : cx.subsets) {
      for (auto const& v : cx.subsets) {
        auto const lhs = compose_maps(op_positions_iso(v, t), op_positions_iso(w, op_tree(v, t)));
        rec.check(lhs == op_positions_iso(w.symmetric_difference(v), t),
                  [&] { return tag(t, w) + " v=" + v.to_string(); });
      }
    }
  }
}

void tree_special_shapes(Context const& cx, Recorder& rec) {
  int const top = cx.options.dims_upto + 1;
  for (auto const& w : cx.subsets) {
    for (int n = 0; n <= top; ++n) {
      rec.check(op_tree(w, disk_tree(n)) == disk_tree(n), [&] { return "disk " + std::to_string(n); });
    }
    for (int n = 1; n <= top; ++n) {
      for (int m = 1; m <= top; ++m) {
        for (int k = 0; k < std::min(n, m); ++k) {
          Tree const expected = w.contains(k + 1) ? comp_tree(m, k, n) : comp_tree(n, k, m);
          rec.check(op_tree(w, comp_tree(n, k, m)) == expected, [&] {
            return "comp " + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + " w=" +
                   w.to_string();
          });
        }
      }
    }
  }
}

void tree_suspension(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    rec.check(suspend_glob(positions(t).scheme.carrier) == positions(suspend_tree(t)).scheme,
              [&] { return to_string(t); });
    for (int k = dim_tree(t); k <= dim_tree(t) + 2; ++k) {
      rec.check(boundary_tree(k, t) == t, [&] { return to_string(t) + " k=" + std::to_string(k); });
    }
  }
  for (int n = 1; n <= cx.options.dims_upto; ++n) {
    for (int m = 1; m <= cx.options.dims_upto; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        rec.check(suspend_tree(comp_tree(n, k, m)) == comp_tree(n + 1, k + 1, m + 1),
                  [&] { return "comp tree " + std::to_string(n) + std::to_string(k) + std::to_string(m); });
      }
    }
  }
}

void globular_laws(Context const& cx, Recorder& rec) {
  for (auto const& t : cx.trees) {
    auto const& x = positions(t).scheme;
    rec.check(hom_glob(suspend_glob(x.carrier)) == x.carrier, [&] { return to_string(t) + " hom/susp"; });
    rec.check(op_glob(DimSet{}, x) == x, [&] { return to_string(t) + " op_empty"; });
    for (auto const& w : cx.subsets) {
      rec.check(op_glob(w, op_glob(w, x)) == x, [&] { return tag(t, w) + " involution"; });
      for (auto const& v : cx.subsets) {
        rec.check(op_glob(w, op_glob(v, x)) == op_glob(w.symmetric_difference(v), x),
                  [&] { return tag(t, w) + " v=" + v.to_string(); });
      }
    }
  }
}

void globular_pushout_counts(Context const& cx, Recorder& rec) {
  int const top = cx.options.dims_upto + 1;
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; m <= top; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        auto const counts = positions(comp_tree(n, k, m)).scheme.carrier.counts();
        bool ok = static_cast<int>(counts.size()) == std::max(n, m) + 1;
        for (int d = 0; ok && d <= std::max(n, m); ++d) {
          int expected = (d <= n) + (d <= m) + (d < n) + (d < m) - 2 * (d < k) - (d == k);
          ok = static_cast<int>(counts[d]) == expected;
        }
        rec.check(ok, [&] { return std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m); });
      }
    }
  }
}

// ---- cells

Cell template_of(Cell const& c) { return Cell::coh(c.tree(), c.sphere(), identity_substitution(c.tree())); }

void cell_typechecks(Context const& cx, Recorder& rec) {
  for (auto const& e : cx.corpus) {
    rec.check(!typecheck_cell(*e.ambient, e.cell), [&] { return e.label; });
    auto const s = suspend_computad(*e.ambient).computad;
    rec.check(!typecheck_cell(s, suspend_cell(e.cell)), [&] { return "susp " + e.label; });
    for (auto const& w : cx.subsets) {
      auto const o = op_computad(w, *e.ambient);
      rec.check(!typecheck_cell(o, op_cell(w, e.cell)), [&] { return "op " + w.to_string() + " " + e.label; });
    }
  }
  auto const eh = eh_computad();
  rec.check(!typecheck_computad(eh.computad), [] { return std::string("C_eh attachments"); });
  rec.check(!typecheck_computad(suspend_computad(eh.computad).computad), [] { return std::string("susp C_eh"); });
}

void cell_op_action(Context const& cx, Recorder& rec) {
  for (auto const& e : cx.corpus) {
    rec.check(op_cell(DimSet{}, e.cell) == e.cell, [&] { return e.label + " op_empty"; });
    for (auto const& w : cx.subsets) {
      Cell const once = op_cell(w, e.cell);
      rec.check(op_cell(w, once) == e.cell, [&] { return e.label + " involution " + w.to_string(); });
      for (auto const& v : cx.subsets) {
        rec.check(op_cell(v, once) == op_cell(w.symmetric_difference(v), e.cell),
                  [&] { return e.label + " w=" + w.to_string() + " v=" + v.to_string(); });
      }
    }
  }
}

void cell_op_structure(Context const& cx, Recorder& rec) {
  for (auto const& e : cx.corpus) {
    auto const supp = support(*e.ambient, e.cell);
    for (auto const& w : cx.subsets) {
      auto const o = op_computad(w, *e.ambient);
      Cell const oc = op_cell(w, e.cell);
      rec.check(support(o, oc) == supp, [&] { return "support " + e.label + " w=" + w.to_string(); });
      if (e.cell.dim() >= 1) {
        rec.check(cell_boundary(o, oc) == op_sphere(w, cell_boundary(*e.ambient, e.cell)),
                  [&] { return "boundary " + e.label + " w=" + w.to_string(); });
      }
      if (e.cell.is_coh()) {
        // Naturality along the substitution that built the cell.
        Cell const t = template_of(e.cell);
        rec.check(oc == apply_morphism(op_morphism(w, e.cell.sub()), op_cell(w, t)),
                  [&] { return "naturality " + e.label + " w=" + w.to_string(); });
      }
    }
  }
}

void cell_op_susp(Context const& cx, Recorder& rec) {
  for (auto const& e : cx.corpus) {
    Cell const s = suspend_cell(e.cell);
    for (auto const& w : cx.subsets) {
      rec.check(op_cell(w, s) == op_susp_iso(w, suspend_cell(op_cell(w.shifted_down(), e.cell))),
                [&] { return e.label + " w=" + w.to_string(); });
    }
  }
}

void cell_op_templates(Context const& cx, Recorder& rec) {
  int const top = cx.options.dims_upto;
  for (auto const& w : cx.subsets) {
    for (int n = 1; n <= top; ++n) {
      for (int m = 1; m <= top; ++m) {
        for (int k = 0; k < std::min(n, m); ++k) {
          Cell const c = comp_cell(n, k, m);
          Cell const other = w.contains(k + 1) ? comp_cell(m, k, n) : c;
          auto const& iso = op_positions_iso(w, c.tree());
          Cell const expected = apply_morphism(renaming(iso, positions(other.tree()).scheme.carrier), other);
          rec.check(op_cell(w, c) == expected, [&] {
            return std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + " w=" + w.to_string();
          });
        }
      }
    }
  }
}

void computad_op_action(Context const& cx, Recorder& rec) {
  auto const eh = eh_computad().computad;
  std::vector<std::pair<std::string, Computad>> cs{{"C_eh", eh}, {"susp C_eh", suspend_computad(eh).computad}};
  for (auto const& t : cx.trees) cs.emplace_back("Pos " + to_string(t), *free_positions(t));
  for (auto const& [label, c] : cs) {
    rec.check(op_computad(DimSet{}, c) == c, [&] { return label + " op_empty"; });
    for (auto const& w : cx.subsets) {
      for (auto const& v : cx.subsets) {
        rec.check(op_computad(w, op_computad(v, c)) == op_computad(w.symmetric_difference(v), c),
                  [&] { return label + " w=" + w.to_string() + " v=" + v.to_string(); });
      }
    }
  }
  for (auto const& w : cx.subsets) {
    rec.check(op_computad(w, eh) == eh, [&] { return "C_eh self-dual w=" + w.to_string(); });
  }
}

void suspension_laws(Context const& cx, Recorder& rec) {
  int const top = cx.options.dims_upto;
  for (int n = 1; n <= top; ++n) {
    for (int m = 1; m <= top; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        rec.check(suspend_cell(comp_cell(n, k, m)) == comp_cell(n + 1, k + 1, m + 1),
                  [&] { return "comp " + std::to_string(n) + std::to_string(k) + std::to_string(m); });
      }
    }
  }
  for (auto const& e : cx.corpus) {
    Cell const s = suspend_cell(e.cell);
    auto const sc = suspend_computad(*e.ambient).computad;
    bool round_trip = false;
    try {
      round_trip = desuspend_cell(s) == e.cell;
    } catch (NotASuspension const&) {
    }
    rec.check(round_trip, [&] { return "desusp " + e.label; });
    std::set<std::string> expected{kSuspMinus, kSuspPlus};
    for (auto const& g : support(*e.ambient, e.cell)) expected.insert("1." + g);
    rec.check(support(sc, s) == expected, [&] { return "support " + e.label; });
    if (e.cell.dim() >= 1) {
      rec.check(cell_boundary(sc, s) == suspend_sphere(cell_boundary(*e.ambient, e.cell)),
                [&] { return "boundary " + e.label; });
    }
  }
}

void eh_identities(Context const& cx, Recorder& rec) {
  auto const eh = eh_computad();
  auto const& c = eh.computad;
  Cell const a = c.var("a");
  Cell const b = c.var("b");
  rec.check(op_cell(DimSet{1}, compose(c, a, 0, b)) == compose(c, b, 0, a), [] { return std::string("op1 comp0"); });
  rec.check(op_cell(DimSet{2}, compose(c, a, 1, b)) == compose(c, b, 1, a), [] { return std::string("op2 comp1"); });
  // Instancewise duality on every composable corpus pair of 2-cells.
  auto const cells = eh_corpus();
  std::vector<Cell> twos;
  for (auto const& x : cells) {
    if (x.dim() == 2 && x.depth() <= 2) twos.push_back(x);
  }
  for (auto const& w : cx.subsets) {
    for (auto const& l : twos) {
      for (auto const& r : twos) {
        for (int k = 0; k < 2; ++k) {
          if (!(tgt_k(c, l, k) == src_k(c, r, k))) continue;
          Cell const lhs = op_cell(w, compose(c, l, k, r));
          Cell const ol = op_cell(w, l);
          Cell const orr = op_cell(w, r);
          Cell const rhs = w.contains(k + 1) ? compose(c, orr, k, ol) : compose(c, ol, k, orr);
          rec.check(lhs == rhs, [&] { return "w=" + w.to_string() + " k=" + std::to_string(k); });
        }
      }
    }
  }
}

// ---- hom

void hom_round_trip(Context const&, Recorder& rec) {
  auto const eh = eh_computad();
  for (auto const& c : eh_loop_corpus()) {
    auto const h = hom_factor(eh, c);
    rec.check(hom_realize(eh, h) == c, [&] { return "realize(factor) " + print_cell(c); });
    rec.check(hom_factor(eh, hom_realize(eh, h)) == h, [&] { return "factor(realize) " + print_cell(c); });
    rec.check(h.term.dim() == c.dim() - 1, [&] { return "dimension " + print_cell(c); });
    rec.check(h.term.is_var() == is_indecomposable(eh, c), [&] { return "generator iff indecomposable"; });
    auto const frag = hom_computad_fragment(eh, h);
    rec.check(!typecheck_cell(frag, h.term), [&] { return "fragment typecheck " + print_cell(c); });
  }
  auto const& base = eh.computad;
  rec.check(is_indecomposable(eh, identity_cell(base, base.var("x"))), [] { return std::string("id x"); });
  auto const seh = suspend_computad(base);
  for (auto const& c : eh_corpus()) {
    Cell const s = suspend_cell(c);
    auto const h = hom_factor(seh, s);
    // Leaves {1.v} stand for the generators v of C_eh.
    Substitution back;
    for (auto const& [name, u] : h.generators) back.emplace(name, desuspend_cell(u));
    rec.check(apply_morphism(back, h.term) == c, [&] { return "hom of suspension " + print_cell(c); });
    if (s.is_coh()) rec.check(!is_indecomposable(seh, s), [&] { return "suspension image " + print_cell(c); });
  }
}

void hom_op_transport(Context const& cx, Recorder& rec) {
  auto const eh = eh_computad();
  for (auto const& c : eh_loop_corpus()) {
    for (auto const& w : cx.subsets) {
      auto const v = op_hom_transport(w, eh, c);
      rec.check(v.equal, [&] { return "w=" + w.to_string() + " " + v.lhs + " vs " + v.rhs; });
    }
  }
}

// ---- counit squares

void counit_squares(Context const& cx, Recorder& rec) {
  auto const dc = eh_double_cells();
  Substitution susp_eval{{kSuspMinus, Cell::var(kSuspMinus, 0)}, {kSuspPlus, Cell::var(kSuspPlus, 0)}};
  for (auto const& [name, x] : dc.env.cells) susp_eval.emplace("1." + name, suspend_cell(x));
  for (auto const& d : dc.cells) {
    Cell const e = counit_eval(dc.env, d);
    rec.check(suspend_cell(e) == apply_morphism(susp_eval, suspend_cell(d)), [&] { return "susp " + print_cell(d); });
    for (auto const& w : cx.subsets) {
      Substitution op_eval;
      for (auto const& [name, x] : dc.env.cells) op_eval.emplace(name, op_cell(w, x));
      rec.check(op_cell(w, e) == apply_morphism(op_eval, op_cell(w, d)),
                [&] { return "op " + w.to_string() + " " + print_cell(d); });
    }
  }
}

std::vector<std::pair<std::string, Law>> const& registry() {
  static std::vector<std::pair<std::string, Law>> const laws{
      {"tree/op-boundary", tree_op_boundary},
      {"tree/op-boundary-inclusions", tree_op_inclusions},
      {"tree/op-action", tree_op_action},
      {"tree/op-positions-morphism", tree_iso_morphism},
      {"tree/op-positions-composite", tree_iso_composite},
      {"tree/op-disk-and-comp", tree_special_shapes},
      {"tree/suspension", tree_suspension},
      {"globular/action-and-unit", globular_laws},
      {"globular/pushout-counts", globular_pushout_counts},
      {"cell/typechecks", cell_typechecks},
      {"cell/op-action", cell_op_action},
      {"cell/op-structure", cell_op_structure},
      {"cell/op-suspension", cell_op_susp},
      {"cell/op-templates", cell_op_templates},
      {"computad/op-action", computad_op_action},
      {"cell/suspension", suspension_laws},
      {"eh/composite-duality", eh_identities},
      {"hom/round-trip", hom_round_trip},
      {"hom/op-transport", hom_op_transport},
      {"counit/squares", counit_squares},
  };
  return laws;
}

}  // namespace

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (auto const& [name, _] : registry()) out.push_back(name);
  return out;
}

LawReport run_laws(LawOptions const& options, std::string const& filter,
                   std::function<void(LawResult const&)> const& on_done) {
  Context cx{options, enumerate_trees(options.max_nodes), DimSet::all_subsets(options.dims_upto),
             law_corpus(options.dims_upto)};
  LawReport report;
  for (auto const& [name, law] : registry()) {
    if (name.compare(0, filter.size(), filter) != 0) continue;
    LawResult r;
    r.name = name;
    Recorder rec(r);
    auto const start = std::chrono::steady_clock::now();
    try {
      law(cx, rec);
    } catch (std::exception const& e) {
      ++r.failures;
      r.samples.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_done) on_done(r);
    report.laws.push_back(std::move(r));
  }
  return report;
}

}  // namespace omegatt
