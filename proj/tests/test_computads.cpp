#include <doctest.h>

#include "omegatt/computad.hpp"
#include "omegatt/corpus.hpp"
#include "omegatt/oplib.hpp"
#include "oracles.hpp"

using namespace omegatt;

namespace {

std::optional<TypeErrorKind> kind_of(Computad const& c, Cell const& cell) {
  auto e = typecheck_cell(c, cell);
  if (!e) return std::nullopt;
  return e->kind();
}

Computad arrows() {
  Computad c;
  c.add_generator("x", 0);
  c.add_generator("y", 0);
  c.add_generator("z", 0);
  c.add_generator("f", 1, Sphere{Cell::var("x", 0), Cell::var("y", 0)});
  c.add_generator("g", 1, Sphere{Cell::var("y", 0), Cell::var("z", 0)});
  return c;
}

Tree const kTwo = parse_tree("[[],[]]");

Cell pos(std::string name) {
  int d = position_dim(name);
  return Cell::var(std::move(name), d);
}

}  // namespace

TEST_CASE("free computads") {
  CHECK(free_computad(disk(0)).size() == 1);
  auto const& two = *free_positions(kTwo);
  CHECK(two.names(0) == std::vector<std::string>{"0", "1", "2"});
  CHECK(two.names(1) == std::vector<std::string>{"1.0", "2.0"});
  CHECK(*two.at("1.0").boundary == Sphere{pos("0"), pos("1")});
  auto d2 = free_computad(disk(2));
  CHECK(d2.names(0).size() == 2);
  CHECK(d2.names(1).size() == 2);
  CHECK(d2.names(2).size() == 1);
  CHECK(*d2.at("1.1.0").boundary == Sphere{pos("1.0"), pos("1.1")});
  CHECK_FALSE(typecheck_computad(d2).has_value());
}

TEST_CASE("boundaries and support") {
  auto const& two = *free_positions(kTwo);
  CHECK(cell_boundary(two, pos("1.0")) == Sphere{pos("0"), pos("1")});
  auto c101 = comp_cell(1, 0, 1);
  CHECK(cell_boundary(two, c101) == Sphere{pos("0"), pos("2")});
  CHECK(support(two, pos("1.0")) == std::set<std::string>{"0", "1", "1.0"});
  CHECK(support(two, c101) == std::set<std::string>{"0", "1", "2", "1.0", "2.0"});

  auto eh = eh_computad().computad;
  for (auto const& c : eh_corpus()) {
    CHECK(support(eh, c) == oracle::support(eh, c));
    if (c.dim() > 0) CHECK(cell_boundary(eh, c) == oracle::boundary(eh, c));
  }
  for (auto const& cc : comp_template_corpus(3)) {
    CHECK(support(*cc.ambient, cc.cell) == oracle::support(*cc.ambient, cc.cell));
    CHECK(cell_boundary(*cc.ambient, cc.cell) == oracle::boundary(*cc.ambient, cc.cell));
  }
}

TEST_CASE("fullness") {
  CHECK(is_full(kTwo, Sphere{pos("0"), pos("2")}));
  CHECK_FALSE(is_full(kTwo, Sphere{pos("0"), pos("1")}));
  for (int n = 0; n <= 3; ++n) {
    auto top = pos(disk_top_position(n));
    CHECK(is_full(disk_tree(n), Sphere{top, top}));
  }
}

TEST_CASE("typechecking") {
  auto eh = eh_computad().computad;
  CHECK_FALSE(typecheck_computad(eh).has_value());
  auto a = eh.var("a");
  auto b = eh.var("b");
  CHECK_FALSE(typecheck_cell(eh, compose(eh, a, 1, b)).has_value());
  CHECK_FALSE(typecheck_cell(eh, compose(eh, a, 0, b)).has_value());

  auto const& two = *free_positions(kTwo);
  auto not_full = Cell::coh(kTwo, Sphere{pos("0"), pos("1")}, identity_substitution(kTwo));
  CHECK(kind_of(two, not_full) == TypeErrorKind::NotFull);
  CHECK(kind_of(two, Cell::var("nope", 0)) == TypeErrorKind::UnknownGenerator);
  CHECK(kind_of(two, Cell::var("1.0", 0)) == TypeErrorKind::DimensionMismatch);

  auto ar = arrows();
  Substitution sub{{"0", ar.var("x")}, {"1", ar.var("y")}, {"2", ar.var("z")},
                   {"1.0", ar.var("f")}, {"2.0", ar.var("g")}};
  auto not_parallel = Cell::coh(kTwo, Sphere{pos("1.0"), pos("2.0")}, sub);
  CHECK(kind_of(ar, not_parallel) == TypeErrorKind::NotParallel);
  CHECK_FALSE(kind_of(ar, Cell::coh(kTwo, Sphere{pos("0"), pos("2")}, sub)).has_value());

  auto wrong = sub;
  wrong["2.0"] = ar.var("f");
  CHECK(kind_of(ar, Cell::coh(kTwo, Sphere{pos("0"), pos("2")}, wrong)) == TypeErrorKind::BadSubstitution);
  auto missing = sub;
  missing.erase("2.0");
  CHECK(kind_of(ar, Cell::coh(kTwo, Sphere{pos("0"), pos("2")}, missing)) == TypeErrorKind::BadSubstitution);
  CHECK_THROWS_AS(check_cell(ar, not_parallel), TypeError);
}

TEST_CASE("morphisms act on cells") {
  auto eh = eh_computad().computad;
  Substitution id;
  for (auto const& [name, _] : eh.generators()) id.emplace(name, eh.var(name));
  for (auto const& c : eh_corpus()) CHECK(apply_morphism(id, c) == c);

  // The 2-composition template instantiated at a and b is their vertical composite.
  auto x = eh.var("x");
  auto idx = identity_cell(eh, x);
  Substitution ab{{"0", x}, {"1", x}, {"1.0", idx}, {"1.1", idx}, {"1.2", idx},
                  {"1.1.0", eh.var("a")}, {"1.2.0", eh.var("b")}};
  CHECK(apply_morphism(ab, comp_cell(2, 1, 2)) == compose(eh, eh.var("a"), 1, eh.var("b")));

  // Two endomorphisms of C_eh: swap a and b, and send a to a composite.
  Substitution swap = id;
  swap["a"] = eh.var("b");
  swap["b"] = eh.var("a");
  Substitution grow = id;
  grow["a"] = compose(eh, eh.var("a"), 1, eh.var("b"));
  for (auto const& sigma : {swap, grow}) {
    CHECK_FALSE(typecheck_morphism(eh, eh, sigma).has_value());
    for (auto const& c : eh_corpus()) {
      auto image = apply_morphism(sigma, c);
      CHECK_FALSE(typecheck_cell(eh, image).has_value());
      if (c.dim() > 0) CHECK(cell_boundary(eh, image) == apply_morphism(sigma, cell_boundary(eh, c)));
    }
  }
  Substitution bad = id;
  bad["a"] = x;
  CHECK(typecheck_morphism(eh, eh, bad).has_value());
}

TEST_CASE("counit evaluation") {
  auto eh = eh_computad().computad;
  auto a = eh.var("a");
  auto b = eh.var("b");
  auto env = cell_environment(eh, {a, b});
  CHECK(counit_eval(env, env.quote(a)) == a);
  auto free = free_computad(env.shape);
  auto qa = env.quote(a);
  auto qb = env.quote(b);
  auto q = compose(free, qa, 1, qb);
  CHECK_FALSE(typecheck_cell(free, q).has_value());
  auto e = counit_eval(env, q);
  CHECK(e.tree() == q.tree());
  CHECK(e.sphere() == q.sphere());
  for (auto const& [p, v] : q.sub()) CHECK(e.sub().at(p) == counit_eval(env, v));
  CHECK(e == compose(eh, a, 1, b));
  CHECK_THROWS_AS(counit_eval(env, Cell::var("{stray}", 0)), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(print_cell(Cell::var("f", 1)) == "f");
  // Bindings come in lexicographic order of position names.
  CHECK(print_cell(comp_cell(1, 0, 1)) ==
        "coh [[],[]] { 0 -> 2 } [ 0 => 0, 1 => 1, 1.0 => 1.0, 2 => 2, 2.0 => 2.0 ]");
}
