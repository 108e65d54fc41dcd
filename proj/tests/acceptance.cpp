// One PASS/FAIL line per acceptance criterion, with the number of checks and the time taken.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "golden.hpp"
#include "omegatt/corpus.hpp"
#include "omegatt/homcat.hpp"
#include "omegatt/laws.hpp"
#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"
#include "omegatt/surface.hpp"
#include "oracles.hpp"

using namespace omegatt;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void operator()(bool ok, std::string const& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
};

using Criterion = std::function<void(Tally&)>;

std::vector<CorpusCell> full_corpus() {
  auto out = law_corpus(3);
  auto eh = std::make_shared<Computad const>(eh_computad().computad);
  for (auto const& c : eh_corpus()) out.push_back({print_cell(c), c, eh});
  return out;
}

bool has_all_templates(std::vector<CorpusCell> const& corpus) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        auto t = comp_cell(n, k, m);
        bool found = false;
        for (auto const& e : corpus) found |= e.cell == t;
        if (!found) return false;
      }
    }
  }
  return true;
}

void tree_laws(Tally& t) {
  for (auto const& b : enumerate_trees(5)) {
    for (auto const& w : DimSet::all_subsets(3)) {
      auto ob = op_tree(w, b);
      auto const& iso = op_positions_iso(w, b);
      for (int k = 0; k <= dim_tree(b) + 1; ++k) {
        auto bd = boundary_tree(k, b);
        std::string const tag = to_string(b) + " w=" + w.to_string() + " k=" + std::to_string(k);
        t(op_tree(w, bd) == boundary_tree(k, ob), "op-boundary " + tag);
        auto const& ibd = op_positions_iso(w, bd);
        auto s_left = compose_maps(src_inclusion(k, b), ibd);
        auto t_left = compose_maps(tgt_inclusion(k, b), ibd);
        auto s_right = compose_maps(iso, src_inclusion(k, ob));
        auto t_right = compose_maps(iso, tgt_inclusion(k, ob));
        bool const flip = w.contains(k + 1);
        t((flip ? t_left : s_left) == s_right, "source equation " + tag);
        t((flip ? s_left : t_left) == t_right, "target equation " + tag);
      }
    }
  }
}

void group_action(Tally& t) {
  auto subsets = DimSet::all_subsets(3);
  auto corpus = law_corpus(3);
  t(corpus.size() >= 50, "corpus has at least 50 cells");
  t(has_all_templates(corpus), "corpus contains every comp_cell(n,k,m) with n,m <= 3");
  std::vector<Computad> computads{eh_computad().computad, suspend_computad(eh_computad().computad).computad};
  for (auto const& b : enumerate_trees(5)) {
    computads.push_back(*free_positions(b));
    auto const& ps = positions(b).scheme;
    t(op_tree(DimSet{}, b) == b, "unit on trees");
    t(op_glob(DimSet{}, ps) == ps, "unit on pasting schemes");
    for (auto const& w : subsets) {
      for (auto const& v : subsets) {
        auto wv = w.symmetric_difference(v);
        t(op_tree(w, op_tree(v, b)) == op_tree(wv, b), "trees " + to_string(b));
        t(op_glob(w, op_glob(v, ps)) == op_glob(wv, ps), "pasting schemes " + to_string(b));
      }
    }
  }
  for (auto const& c : computads) {
    t(op_computad(DimSet{}, c) == c, "unit on computads");
    for (auto const& w : subsets) {
      for (auto const& v : subsets) {
        t(op_computad(w, op_computad(v, c)) == op_computad(w.symmetric_difference(v), c), "computads");
      }
    }
  }
  for (auto const& e : corpus) {
    t(op_cell(DimSet{}, e.cell) == e.cell, "unit on " + e.label);
    for (auto const& w : subsets) {
      for (auto const& v : subsets) {
        t(op_cell(w, op_cell(v, e.cell)) == op_cell(w.symmetric_difference(v), e.cell),
          e.label + " w=" + w.to_string() + " v=" + v.to_string());
      }
    }
  }
}

void suspension_laws(Tally& t) {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        t(suspend_tree(comp_tree(n, k, m)) == comp_tree(n + 1, k + 1, m + 1), "tree");
        t(suspend_cell(comp_cell(n, k, m)) == comp_cell(n + 1, k + 1, m + 1), "cell");
      }
    }
  }
  for (auto const& e : full_corpus()) {
    auto s = suspend_cell(e.cell);
    bool round_trip = false;
    try {
      round_trip = desuspend_cell(s) == e.cell;
    } catch (NotASuspension const&) {
    }
    t(round_trip, "desuspend " + e.label);
    std::set<std::string> expected{kSuspMinus, kSuspPlus};
    for (auto const& g : oracle::support(*e.ambient, e.cell)) expected.insert("1." + g);
    t(support(suspend_computad(*e.ambient).computad, s) == expected, "support " + e.label);
  }
}

void pushouts(Tally& t) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        auto counts = positions(comp_tree(n, k, m)).scheme.carrier.counts();
        t(std::vector<int>(counts.begin(), counts.end()) == oracle::pushout_counts(n, k, m),
          std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m));
      }
    }
  }
}

std::optional<TypeErrorKind> elaboration_error(std::string const& file) {
  try {
    elaborate(parse(golden::slurp(std::filesystem::path(OMEGATT_SOURCE_DIR) / file)));
  } catch (ElabError const& e) {
    return e.kind();
  }
  return std::nullopt;
}

void typechecker(Tally& t) {
  auto eh = eh_computad().computad;
  t(!typecheck_computad(eh).has_value(), "C_eh attachments");
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        auto c = comp_cell(n, k, m);
        auto const& amb = *free_positions(c.tree());
        t(!typecheck_cell(amb, c).has_value(), "template");
        t(!typecheck_cell(amb, identity_cell(amb, c)).has_value(), "identity of template");
      }
    }
  }
  for (auto const& e : full_corpus()) {
    t(!typecheck_cell(*e.ambient, e.cell).has_value(), e.label);
    t(!typecheck_cell(suspend_computad(*e.ambient).computad, suspend_cell(e.cell)).has_value(), "susp " + e.label);
    for (auto const& w : DimSet::all_subsets(3)) {
      t(!typecheck_cell(op_computad(w, *e.ambient), op_cell(w, e.cell)).has_value(), "op " + e.label);
    }
  }
  t(elaboration_error("ctt/bad_notfull.ctt") == TypeErrorKind::NotFull, "NotFull rejected");
  t(elaboration_error("ctt/bad_notparallel.ctt") == TypeErrorKind::NotParallel, "NotParallel rejected");
}

void hom_round_trip(Tally& t) {
  auto eh = eh_computad();
  auto loops = eh_loop_corpus();
  t(!loops.empty(), "loop corpus");
  for (auto const& l : loops) {
    t(l.depth() <= 3, "depth bound");
    auto h = hom_factor(eh, l);
    t(hom_realize(eh, h) == l, "realize after factor " + print_cell(l));
    t(hom_factor(eh, hom_realize(eh, h)) == h, "factor after realize " + print_cell(l));
  }
  BipointedComputad point{free_computad(disk(0)), Cell::var("0", 0), Cell::var("0", 0)};
  t(is_indecomposable(point, identity_cell(point.computad, point.base_minus)), "id x is indecomposable");
  auto seh = suspend_computad(eh.computad);
  for (auto const& c : eh_corpus()) {
    if (c.is_coh()) t(!is_indecomposable(seh, suspend_cell(c)), "suspension image " + print_cell(c));
  }
}

void hom_transport(Tally& t) {
  auto eh = eh_computad();
  for (auto const& l : eh_loop_corpus()) {
    for (auto const& w : DimSet::all_subsets(3)) {
      auto v = op_hom_transport(w, eh, l);
      t(v.equal, print_cell(l) + " w=" + w.to_string() + ": " + v.lhs + " vs " + v.rhs);
    }
  }
}

void eh_identities(Tally& t) {
  auto const& c = eh_computad().computad;
  auto a = c.var("a");
  auto b = c.var("b");
  t(op_cell(DimSet{1}, compose(c, a, 0, b)) == compose(c, b, 0, a), "op1 comp0");
  t(op_cell(DimSet{2}, compose(c, a, 1, b)) == compose(c, b, 1, a), "op2 comp1");
  for (auto const& w : DimSet::all_subsets(3)) t(op_computad(w, c) == c, "self-dual w=" + w.to_string());
}

void counit_squares(Tally& t) {
  auto dc = eh_double_cells();
  t(dc.cells.size() >= 20, "at least 20 double cells");
  auto susp_free = suspend_computad(*dc.free).computad;
  Substitution susp_eval{{kSuspMinus, Cell::var(kSuspMinus, 0)}, {kSuspPlus, Cell::var(kSuspPlus, 0)}};
  for (auto const& [name, x] : dc.env.cells) susp_eval.emplace("1." + name, suspend_cell(x));
  for (auto const& d : dc.cells) {
    auto const e = counit_eval(dc.env, d);
    auto const sd = suspend_cell(d);
    t(!typecheck_cell(susp_free, sd).has_value(), "suspended double cell typechecks");
    t(suspend_cell(e) == apply_morphism(susp_eval, sd), "susp square " + print_cell(d));
    for (auto const& w : DimSet::all_subsets(3)) {
      Substitution op_eval;
      for (auto const& [name, x] : dc.env.cells) op_eval.emplace(name, op_cell(w, x));
      t(op_cell(w, e) == apply_morphism(op_eval, op_cell(w, d)), "op square " + print_cell(d));
    }
  }
}

double laws_seconds = 0;

void cli_golden(Tally& t) {
  auto const dir = std::filesystem::path(OMEGATT_SOURCE_DIR) / "tests" / "golden";
  for (auto const& c : golden::cases(dir)) {
    auto r = golden::run(c.args);
    t(r.exit_status == c.exit_status, c.name + " exit status");
    t(r.text == golden::slurp(dir / (c.name + ".out")), c.name + " output");
  }
  auto start = std::chrono::steady_clock::now();
  auto r = golden::run({"laws", "--max-nodes", "5", "--dims-upto", "3"});
  laws_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t(r.exit_status == 0 && r.text.find("checks passed") != std::string::npos, "laws full run");
  t(laws_seconds < 300, "laws full run under 5 minutes");
}

}  // namespace

int main() {
  struct Entry {
    int number;
    char const* title;
    Criterion run;
    double budget_seconds;
  };
  std::vector<Entry> const criteria{
      {1, "tree laws for op and boundaries", tree_laws, 60},
      {2, "opposites form a group action", group_action, 0},
      {3, "suspension laws", suspension_laws, 0},
      {4, "pushout cell counts", pushouts, 0},
      {5, "typechecker", typechecker, 0},
      {6, "hom freeness round trip", hom_round_trip, 0},
      {7, "opposites commute with hom", hom_transport, 0},
      {8, "Eckmann-Hilton composite identities", eh_identities, 0},
      {9, "counit squares for suspension and opposites", counit_squares, 0},
      {10, "CLI golden outputs and full law run", cli_golden, 0},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(tally);
    } catch (std::exception const& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool over = c.budget_seconds > 0 && secs >= c.budget_seconds;
    bool ok = error.empty() && tally.failures == 0 && tally.checks > 0 && !over;
    failed += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %.2fs)", ok ? "PASS" : "FAIL", c.number, c.title, tally.checks, secs);
    if (c.number == 10) std::printf(" [laws full run %.2fs]", laws_seconds);
    if (!error.empty()) std::printf(" exception: %s", error.c_str());
    if (tally.failures) std::printf(" %zu failures, first: %s", tally.failures, tally.first.c_str());
    if (over) std::printf(" over the %.0fs budget", c.budget_seconds);
    std::printf("\n");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
