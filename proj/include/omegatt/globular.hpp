#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "omegatt/dimset.hpp"

namespace omegatt {

using CellId = std::string;

/// A finite globular set. Cell identifiers are unique across dimensions.
/// Values are built once through add_cell and treated as immutable afterwards.
class GlobularSet {
 public:
  GlobularSet() = default;

  /// Adds a 0-cell.
  void add_point(CellId const& id);
  /// Adds a positive-dimensional cell; src and tgt must already exist one dimension lower.
  void add_cell(CellId const& id, int dim, CellId const& src, CellId const& tgt);

  bool contains(CellId const& id) const { return dim_.count(id) != 0; }
  int dim_of(CellId const& id) const;
  CellId const& src(CellId const& id) const;
  CellId const& tgt(CellId const& id) const;
  /// Iterated source down to dimension k (k <= dim_of(id)).
  CellId src_k(CellId const& id, int k) const;
  CellId tgt_k(CellId const& id, int k) const;

  /// Highest dimension holding a cell, -1 when empty.
  int dimension_bound() const { return static_cast<int>(cells_.size()) - 1; }
  std::set<CellId> const& cells(int dim) const;
  std::size_t count(int dim) const { return cells(dim).size(); }
  std::size_t size() const { return dim_.size(); }
  bool empty() const { return dim_.empty(); }
  /// Cell counts indexed by dimension.
  std::vector<std::size_t> counts() const;

  std::map<CellId, CellId> const& src_map() const { return src_; }
  std::map<CellId, CellId> const& tgt_map() const { return tgt_; }

  /// Throws std::logic_error when globularity fails.
  void validate() const;

  friend bool operator==(GlobularSet const&, GlobularSet const&) = default;

 private:
  std::vector<std::set<CellId>> cells_;
  std::map<CellId, int> dim_;
  std::map<CellId, CellId> src_;
  std::map<CellId, CellId> tgt_;
};

struct BipointedGlobularSet {
  GlobularSet carrier;
  CellId base_minus;
  CellId base_plus;

  /// True when the basepoints are "0" and "1" and every other cell is named "1.<rest>",
  /// i.e. the naming produced by suspend_glob.
  bool in_suspension_form() const;

  friend bool operator==(BipointedGlobularSet const&, BipointedGlobularSet const&) = default;
};

/// A map of cell identifiers, used for morphisms between finite globular sets.
using CellMap = std::map<CellId, CellId>;

/// The representable n-disk, named as the positions of the disk tree:
/// "1^j.0" / "1^j.1" for the j-source / j-target and "1^n.0" for the top cell.
GlobularSet disk(int n);

/// Wedge sum. Part i contributes junction 0-cells "i-1" and "i"; its other cells are
/// tagged "i.<name>", except that a part in suspension form has its "1." prefix replaced.
BipointedGlobularSet wedge(std::vector<BipointedGlobularSet> const& parts);

/// Suspension: basepoints "0" and "1", every cell x shifted up one dimension as "1.x".
BipointedGlobularSet suspend_glob(GlobularSet const& x);

/// Path space: cells from base_minus to base_plus, one dimension lower.
/// Suspension-form input has its "1." prefix stripped, so hom_glob(suspend_glob(X)) == X.
GlobularSet hom_glob(BipointedGlobularSet const& x);

GlobularSet op_glob(DimSet const& w, GlobularSet const& x);
/// Also swaps the basepoints when 1 is in w.
BipointedGlobularSet op_glob(DimSet const& w, BipointedGlobularSet const& x);

/// True iff f is a total, dimension-preserving map from cells of x to cells of y
/// commuting with src and tgt.
bool is_globular_morphism(CellMap const& f, GlobularSet const& x, GlobularSet const& y);

/// Applies an injective renaming to every cell.
GlobularSet rename_cells(GlobularSet const& x, CellMap const& f);

}  // namespace omegatt
