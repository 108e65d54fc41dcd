#pragma once

#include <map>
#include <optional>
#include <string>

#include "omegatt/computad.hpp"
#include "omegatt/dimset.hpp"

namespace omegatt {

/// A cell over the hom computad of a bipointed computad. Generators of the hom computad are
/// indecomposable loop cells; a generator appears in `term` as a Var named "{<cell>}" one
/// dimension below its underlying cell, and `generators` maps each such name to that cell.
struct HomCell {
  Cell term;
  std::map<std::string, Cell> generators;

  friend bool operator==(HomCell const&, HomCell const&) = default;
};

/// Name of the hom generator standing for an indecomposable loop cell.
std::string hom_generator_name(Cell const& underlying);
Cell hom_generator(Cell const& underlying);

/// Iterated 0-source and 0-target are the two basepoints.
bool is_loop_cell(BipointedComputad const& c, Cell const& cell);

/// False exactly for loop cells in the image of the suspension structure map:
/// Coh(br[B], A, tau) with tau sending the root sectors to the basepoints and A a suspension.
/// Throws std::invalid_argument on a non-loop cell.
bool is_indecomposable(BipointedComputad const& c, Cell const& cell);

/// Raised when a sphere desuspends cellwise but the result is not full.
class DesuspendedNotFull : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of the comparison map from the free hom computad. Throws std::invalid_argument
/// on a non-loop cell.
HomCell hom_factor(BipointedComputad const& c, Cell const& cell);

/// The loop cell a hom cell stands for. Throws std::invalid_argument on an unknown generator.
Cell hom_realize(BipointedComputad const& c, HomCell const& h);

/// The finite part of the hom computad needed to typecheck h: its generators and, recursively,
/// the generators in their attachments.
Computad hom_computad_fragment(BipointedComputad const& c, HomCell const& h);

struct TransportVerdict {
  bool equal = true;
  std::string lhs;
  std::string rhs;
};

/// Compares the factorization of op_w(cell) over op_w(c) with op_{w-1} of the factorization of
/// cell, renaming each hom generator u to op_w(u).
TransportVerdict op_hom_transport(DimSet const& w, BipointedComputad const& c, Cell const& cell);

}  // namespace omegatt
