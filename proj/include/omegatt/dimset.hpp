#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace omegatt {

/// A finite set of positive dimensions acting on globular data by opposites.
/// Composition of the action is symmetric difference.
class DimSet {
 public:
  DimSet() = default;
  explicit DimSet(std::set<int> dims);
  DimSet(std::initializer_list<int> dims);

  /// Parses "1,3" (or an empty string) into a DimSet.
  static DimSet parse(std::string_view csv);

  /// Every subset of {1, ..., upto}, in binary-counting order.
  static std::vector<DimSet> all_subsets(int upto);

  bool contains(int n) const { return dims_.count(n) != 0; }
  bool empty() const { return dims_.empty(); }
  std::set<int> const& dims() const { return dims_; }

  DimSet symmetric_difference(DimSet const& other) const;

  /// {n >= 1 | n + 1 in w}.
  DimSet shifted_down() const;

  /// {n + 1 | n in w}.
  DimSet shifted_up() const;

  std::string to_string() const;

  friend bool operator==(DimSet const&, DimSet const&) = default;
  friend auto operator<=>(DimSet const&, DimSet const&) = default;

 private:
  std::set<int> dims_;
};

}  // namespace omegatt
