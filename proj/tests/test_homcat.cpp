#include <doctest.h>

#include "omegatt/corpus.hpp"
#include "omegatt/homcat.hpp"
#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"

using namespace omegatt;

namespace {

BipointedComputad point() {
  auto c = free_computad(disk(0));
  return {c, Cell::var("0", 0), Cell::var("0", 0)};
}

// The hom-level binary composite of two generators standing for the given loop cells.
HomCell hom_composite(Cell const& base, Cell const& l, Cell const& r) {
  auto c101 = comp_cell(1, 0, 1);
  auto gb = hom_generator(base);
  Substitution sub{{"0", gb}, {"1", gb}, {"2", gb}, {"1.0", hom_generator(l)}, {"2.0", hom_generator(r)}};
  return HomCell{Cell::coh(c101.tree(), c101.sphere(), sub),
                 {{hom_generator_name(base), base}, {hom_generator_name(l), l}, {hom_generator_name(r), r}}};
}

}  // namespace

TEST_CASE("loop cells") {
  auto eh = eh_computad();
  CHECK(is_loop_cell(eh, eh.computad.var("a")));
  auto two = *free_positions(comp_tree(1, 0, 1));
  BipointedComputad ends{two, Cell::var("0", 0), Cell::var("2", 0)};
  CHECK_FALSE(is_loop_cell(ends, Cell::var("1.0", 1)));
  CHECK_THROWS_AS(is_indecomposable(ends, Cell::var("1.0", 1)), std::invalid_argument);
  CHECK_THROWS_AS(hom_factor(ends, Cell::var("1.0", 1)), std::invalid_argument);

  auto s = suspend_computad(eh.computad);
  for (auto const& c : eh_corpus()) CHECK(is_loop_cell(s, suspend_cell(c)));
}

TEST_CASE("indecomposable cells") {
  auto p = point();
  auto idx = identity_cell(p.computad, p.base_minus);
  CHECK(is_indecomposable(p, idx));
  CHECK(is_indecomposable(p, compose(p.computad, idx, 0, idx)));

  auto sc = suspend_computad(*free_positions(comp_tree(1, 0, 1)));
  CHECK_FALSE(is_indecomposable(sc, suspend_cell(comp_cell(1, 0, 1))));

  auto eh = eh_computad();
  auto seh = suspend_computad(eh.computad);
  for (auto const& c : eh_corpus()) {
    if (c.is_coh()) CHECK_FALSE(is_indecomposable(seh, suspend_cell(c)));
  }
  CHECK(is_indecomposable(eh, eh.computad.var("a")));
}

TEST_CASE("factoring and realizing") {
  auto eh = eh_computad();
  auto const& c = eh.computad;
  auto a = c.var("a");
  auto b = c.var("b");
  auto idx = identity_cell(c, c.var("x"));

  auto ha = hom_factor(eh, a);
  CHECK(ha.term == Cell::var("{a}", 1));
  CHECK(ha.generators == std::map<std::string, Cell>{{"{a}", a}});
  CHECK(hom_realize(eh, ha) == a);

  // The vertical composite is the hom-level composite of 1-cells.
  auto v = compose(c, a, 1, b);
  auto expected = hom_composite(idx, a, b);
  CHECK(hom_factor(eh, v) == expected);
  CHECK(hom_realize(eh, expected) == v);
  CHECK_FALSE(typecheck_cell(hom_computad_fragment(eh, expected), expected.term).has_value());

  HomCell stray{Cell::var("{nope}", 0), {}};
  CHECK_THROWS_AS(hom_realize(eh, stray), std::invalid_argument);
}

TEST_CASE("the hom round trip") {
  auto eh = eh_computad();
  auto loops = eh_loop_corpus();
  CHECK(loops.size() >= 50);
  for (auto const& l : loops) {
    auto h = hom_factor(eh, l);
    CHECK(hom_realize(eh, h) == l);
    CHECK(hom_factor(eh, hom_realize(eh, h)) == h);
    auto frag = hom_computad_fragment(eh, h);
    CHECK_FALSE(typecheck_cell(frag, h.term).has_value());
    for (auto const& [_, u] : h.generators) CHECK(is_indecomposable(eh, u));
  }

  // Hom cells built directly over the hom computad.
  auto const& c = eh.computad;
  auto idx = identity_cell(c, c.var("x"));
  auto seed = hom_composite(idx, c.var("a"), c.var("b"));
  auto frag = hom_computad_fragment(eh, seed);
  auto ga = hom_generator(c.var("a"));
  auto gb = hom_generator(c.var("b"));
  std::vector<Cell> terms{ga, compose(frag, ga, 0, gb), compose(frag, gb, 0, ga), identity_cell(frag, ga),
                          compose(frag, compose(frag, ga, 0, gb), 0, ga)};
  for (auto const& t : terms) {
    HomCell h{t, seed.generators};
    auto r = hom_realize(eh, h);
    CHECK_FALSE(typecheck_cell(c, r).has_value());
    auto back = hom_factor(eh, r);
    CHECK(back.term == h.term);
  }
}

TEST_CASE("desuspended spheres must be full") {
  auto t = parse_tree("[[[],[]]]");
  auto sc = suspend_computad(*free_positions(parse_tree("[[],[]]")));
  CHECK(sc.computad == *free_positions(t));
  Sphere bad{Cell::var("1.0", 1), Cell::var("1.1", 1)};
  auto cell = Cell::coh(t, bad, identity_substitution(t));
  CHECK_THROWS_AS(hom_factor(sc, cell), DesuspendedNotFull);
}

TEST_CASE("opposites commute with hom") {
  auto eh = eh_computad();
  auto const& c = eh.computad;
  auto a = c.var("a");
  auto b = c.var("b");
  auto v = compose(c, a, 1, b);
  auto verdict = op_hom_transport(DimSet{2}, eh, v);
  CHECK(verdict.equal);
  auto idx = identity_cell(c, c.var("x"));
  CHECK(hom_factor(eh, op_cell(DimSet{2}, v)) == hom_composite(idx, b, a));

  for (auto const& l : eh_loop_corpus()) {
    CHECK(op_hom_transport(DimSet{}, eh, l).equal);
    for (auto const& w : DimSet::all_subsets(3)) {
      auto r = op_hom_transport(w, eh, l);
      CHECK_MESSAGE(r.equal, print_cell(l), " w=", w.to_string());
    }
  }
}
