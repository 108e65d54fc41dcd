#pragma once

#include <stdexcept>
#include <string>

#include "omegatt/computad.hpp"
#include "omegatt/dimset.hpp"

namespace omegatt {

// Suspension. Names follow suspend_glob: the new 0-generators are "0" (v-) and "1" (v+),
// and a generator v becomes "1.v" one dimension higher.

inline constexpr char const* kSuspMinus = "0";
inline constexpr char const* kSuspPlus = "1";

BipointedComputad suspend_computad(Computad const& c);
Cell suspend_cell(Cell const& c);
Sphere suspend_sphere(Sphere const& s);
/// Suspension of a position- or generator-keyed morphism: adds the basepoint bindings.
Substitution suspend_morphism(Substitution const& sigma);

/// Raised when a term is not in the image of suspension; path locates the first obstruction.
class NotASuspension : public std::runtime_error {
 public:
  NotASuspension(std::string path, std::string const& detail);
  std::string const& path() const { return path_; }

 private:
  std::string path_;
};

/// The unique c' with suspend_cell(c') == c, or NotASuspension.
Cell desuspend_cell(Cell const& c);
Sphere desuspend_sphere(Sphere const& s);
/// Inverse of suspend_computad on its image.
Computad desuspend_computad(Computad const& c);

// Opposites with respect to a set of dimensions w.

Computad op_computad(DimSet const& w, Computad const& c);
/// Also swaps the basepoints when 1 is in w.
BipointedComputad op_computad(DimSet const& w, BipointedComputad const& c);
Cell op_cell(DimSet const& w, Cell const& c);
/// Applies op_cell to both cells of an n-sphere and swaps them iff n + 1 is in w.
Sphere op_sphere(DimSet const& w, Sphere const& s);
/// Applies op_cell to every value; keys are unchanged.
Substitution op_morphism(DimSet const& w, Substitution const& sigma);

/// The renaming v- <-> v+ of the suspension basepoints when 1 is in w, identity otherwise.
/// Maps cells of suspend(op_{w-1} C) to cells of op_w(suspend C).
Cell op_susp_iso(DimSet const& w, Cell const& c);

}  // namespace omegatt
