#include <doctest.h>

#include <set>

#include "omegatt/tree.hpp"
#include "oracles.hpp"

using namespace omegatt;

namespace {

Tree const kB = parse_tree("[[[],[]],[]]");

std::set<int> as_set(DimSet const& w) { return w.dims(); }

bool bijective(CellMap const& f, GlobularSet const& x, GlobularSet const& y) {
  std::set<CellId> image;
  for (auto const& [_, v] : f) image.insert(v);
  return f.size() == x.size() && image.size() == y.size();
}

}  // namespace

TEST_CASE("literals and enumeration") {
  CHECK(to_string(kB) == "[[[],[]],[]]");
  CHECK(parse_tree(" [ [ ] , [ ] ] ") == parse_tree("[[],[]]"));
  CHECK_THROWS_AS(parse_tree("[[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree("[],"), std::invalid_argument);
  auto trees = enumerate_trees(5);
  // Plane trees with n nodes are counted by Catalan(n - 1): 1 + 1 + 2 + 5 + 14.
  CHECK(trees.size() == 23);
  CHECK(std::set<Tree>(trees.begin(), trees.end()).size() == trees.size());
  for (auto const& t : trees) CHECK(parse_tree(to_string(t)) == t);
}

TEST_CASE("dimension") {
  CHECK(dim_tree(parse_tree("[]")) == 0);
  CHECK(dim_tree(kB) == 2);
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) CHECK(dim_tree(comp_tree(n, k, m)) == std::max(n, m));
    }
  }
}

TEST_CASE("boundaries") {
  CHECK(boundary_tree(1, kB) == parse_tree("[[],[]]"));
  for (auto const& t : enumerate_trees(5)) {
    CHECK(boundary_tree(0, t) == Tree{});
    for (int k = 0; k <= 5; ++k) {
      CHECK(to_string(boundary_tree(k, t)) == oracle::boundary_literal(to_string(t), k));
      if (k >= dim_tree(t)) CHECK(boundary_tree(k, t) == t);
    }
  }
}

TEST_CASE("positions") {
  auto const& ps = positions(kB);
  CHECK(ps.scheme.carrier.counts() == std::vector<std::size_t>{3, 4, 2});
  CHECK(ps.scheme.base_minus == "0");
  CHECK(ps.scheme.base_plus == "2");
  // Figure labels: x y z = 0 1 2; f g h = 1.0 1.1 1.2; k = 2.0; a b = 1.1.0 1.2.0.
  auto const& g = ps.scheme.carrier;
  CHECK(g.src("1.1.0") == "1.0");
  CHECK(g.tgt("1.1.0") == "1.1");
  CHECK(g.src("1.2.0") == "1.1");
  CHECK(g.tgt("1.2.0") == "1.2");
  CHECK(g.src("2.0") == "1");
  CHECK(g.tgt("2.0") == "2");
  for (int k = 0; k <= 4; ++k) CHECK(positions(disk_tree(k)).scheme.carrier == disk(k));
  for (auto const& t : enumerate_trees(5)) {
    auto const& c = positions(t).scheme.carrier;
    c.validate();
    CHECK(c.counts() == oracle::position_counts(t));
    for (int d = 0; d <= c.dimension_bound(); ++d) {
      for (auto const& p : c.cells(d)) CHECK(position_dim(p) == d);
    }
  }
}

TEST_CASE("composite trees and pushouts") {
  CHECK(comp_tree(1, 0, 1) == parse_tree("[[],[]]"));
  CHECK(disk_tree(2) == parse_tree("[[[]]]"));
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 0; k < std::min(n, m); ++k) {
        auto counts = positions(comp_tree(n, k, m)).scheme.carrier.counts();
        auto expected = oracle::pushout_counts(n, k, m);
        CHECK(std::vector<int>(counts.begin(), counts.end()) == expected);
        // The closed form.
        for (int d = 0; d <= std::max(n, m); ++d) {
          int f = (d <= n) + (d <= m) + (d < n) + (d < m) - 2 * (d < k) - (d == k);
          CHECK(static_cast<int>(counts[d]) == f);
        }
        CHECK(suspend_tree(comp_tree(n, k, m)) == comp_tree(n + 1, k + 1, m + 1));
      }
    }
  }
  CHECK_THROWS(comp_tree(1, 1, 2));
}

TEST_CASE("boundary inclusions") {
  auto s0 = src_inclusion(0, kB);
  auto t0 = tgt_inclusion(0, kB);
  CHECK(s0 == CellMap{{"0", "0"}});
  CHECK(t0 == CellMap{{"0", "2"}});

  auto s1 = src_inclusion(1, kB);
  auto t1 = tgt_inclusion(1, kB);
  CHECK(s1.at("1.0") == "1.0");
  CHECK(t1.at("1.0") == "1.2");
  CHECK(s1.at("2.0") == "2.0");
  CHECK(t1.at("2.0") == "2.0");
  for (auto const& p : {"0", "1", "2"}) {
    CHECK(s1.at(p) == p);
    CHECK(t1.at(p) == p);
  }

  for (auto const& t : enumerate_trees(5)) {
    auto const& target = positions(t).scheme.carrier;
    for (int k = 0; k <= dim_tree(t) + 1; ++k) {
      auto const& bd = positions(boundary_tree(k, t)).scheme.carrier;
      auto s = src_inclusion(k, t);
      auto tt = tgt_inclusion(k, t);
      CHECK(oracle::is_morphism(s, bd, target));
      CHECK(oracle::is_morphism(tt, bd, target));
      if (k >= dim_tree(t)) {
        CHECK(bijective(s, bd, target));
        CHECK(bijective(tt, bd, target));
      }
    }
  }
}

TEST_CASE("opposite trees") {
  auto t = parse_tree("[[[[]],[]],[]]");
  CHECK(op_tree(DimSet{1}, t) == parse_tree("[[],[[[]],[]]]"));
  CHECK(op_tree(DimSet{2}, t) == parse_tree("[[[],[[]]],[]]"));
  for (auto const& w : DimSet::all_subsets(3)) {
    for (int n = 0; n <= 4; ++n) CHECK(op_tree(w, disk_tree(n)) == disk_tree(n));
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        for (int k = 0; k < std::min(n, m); ++k) {
          auto expected = w.contains(k + 1) ? comp_tree(m, k, n) : comp_tree(n, k, m);
          CHECK(op_tree(w, comp_tree(n, k, m)) == expected);
        }
      }
    }
    for (auto const& b : enumerate_trees(5)) CHECK(op_tree(w, b) == oracle::op_tree(as_set(w), b));
  }
}

TEST_CASE("position isomorphisms") {
  auto tw = parse_tree("[[],[]]");
  auto iso = op_positions_iso(DimSet{1}, tw);
  CHECK(iso == CellMap{{"0", "2"}, {"1", "1"}, {"2", "0"}, {"1.0", "2.0"}, {"2.0", "1.0"}});

  auto subsets = DimSet::all_subsets(3);
  for (auto const& b : enumerate_trees(5)) {
    auto const& pb = positions(b).scheme;
    CellMap identity;
    for (int d = 0; d <= pb.carrier.dimension_bound(); ++d) {
      for (auto const& p : pb.carrier.cells(d)) identity[p] = p;
    }
    CHECK(op_positions_iso(DimSet{}, b) == identity);
    for (auto const& w : subsets) {
      auto const& f = op_positions_iso(w, b);
      auto const& dom = positions(op_tree(w, b)).scheme;
      auto cod = op_glob(w, pb);
      CHECK(oracle::is_morphism(f, dom.carrier, cod.carrier));
      CHECK(bijective(f, dom.carrier, cod.carrier));
      CHECK(f.at(dom.base_minus) == cod.base_minus);
      CHECK(f.at(dom.base_plus) == cod.base_plus);

      // The four boundary-inclusion equations.
      for (int k = 0; k <= dim_tree(b); ++k) {
        auto bd = boundary_tree(k, b);
        auto const& ibd = op_positions_iso(w, bd);
        auto ob = op_tree(w, b);
        auto lhs_s = compose_maps(src_inclusion(k, b), ibd);
        auto lhs_t = compose_maps(tgt_inclusion(k, b), ibd);
        auto rhs_s = compose_maps(f, src_inclusion(k, ob));
        auto rhs_t = compose_maps(f, tgt_inclusion(k, ob));
        CHECK(boundary_tree(k, ob) == op_tree(w, bd));
        if (w.contains(k + 1)) {
          CHECK(lhs_t == rhs_s);
          CHECK(lhs_s == rhs_t);
        } else {
          CHECK(lhs_s == rhs_s);
          CHECK(lhs_t == rhs_t);
        }
      }

      for (auto const& v : subsets) {
        // op_w^{op_v B} followed by op_w(op_v^B) is op_{w v}^B.
        auto composite = compose_maps(op_positions_iso(v, b), op_positions_iso(w, op_tree(v, b)));
        CHECK(composite == op_positions_iso(w.symmetric_difference(v), b));
      }
    }
  }
}
