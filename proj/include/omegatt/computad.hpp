#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegatt/cell.hpp"
#include "omegatt/globular.hpp"
#include "omegatt/tree.hpp"

namespace omegatt {

struct Generator {
  std::string name;
  int dim = 0;
  /// Attaching sphere; present iff dim >= 1.
  std::optional<Sphere> boundary;

  friend bool operator==(Generator const&, Generator const&) = default;
};

/// A finite computad: generators per dimension, each positive-dimensional one attached to a
/// sphere one dimension lower. Generator names are unique across dimensions.
class Computad {
 public:
  Computad() = default;

  /// Generators must be added bottom-up; attachments are not typechecked here.
  void add_generator(std::string const& name, int dim, std::optional<Sphere> boundary = std::nullopt);

  bool has(std::string const& name) const { return gens_.count(name) != 0; }
  Generator const& at(std::string const& name) const;
  std::vector<std::string> const& names(int dim) const;
  int dimension_bound() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const { return gens_.size(); }
  std::map<std::string, Generator> const& generators() const { return gens_; }

  /// The generator as a cell.
  Cell var(std::string const& name) const;

  friend bool operator==(Computad const& a, Computad const& b) { return a.gens_ == b.gens_; }

 private:
  std::map<std::string, Generator> gens_;
  std::vector<std::vector<std::string>> by_dim_;
};

/// A computad with two chosen 0-cells.
struct BipointedComputad {
  Computad computad;
  Cell base_minus;
  Cell base_plus;

  friend bool operator==(BipointedComputad const&, BipointedComputad const&) = default;
};

Computad free_computad(GlobularSet const& x);

/// free_computad(positions(t).scheme.carrier), cached.
std::shared_ptr<Computad const> free_positions(Tree const& t);

/// The identity substitution Pos(t) -> free Pos(t).
Substitution identity_substitution(Tree const& t);

/// Source and target of a positive-dimensional cell.
Sphere cell_boundary(Computad const& c, Cell const& cell);
/// Iterated source/target down to dimension k.
Cell src_k(Computad const& c, Cell const& cell, int k);
Cell tgt_k(Computad const& c, Cell const& cell, int k);

std::set<std::string> support(Computad const& c, Cell const& cell);

/// Fullness of a sphere over free Pos(tree): the supports of its source and target are the
/// images of the source and target inclusions of the boundary of matching dimension.
bool is_full(Tree const& tree, Sphere const& sphere);

/// Replaces generators by their images and composes substitutions pointwise.
/// Throws std::out_of_range on a missing binding.
Cell apply_morphism(Substitution const& sigma, Cell const& cell);
Sphere apply_morphism(Substitution const& sigma, Sphere const& sphere);
/// sigma after tau, pointwise.
Substitution compose_substitutions(Substitution const& sigma, Substitution const& tau);
/// The substitution sending each generator to the generator named by f.
Substitution renaming(CellMap const& f, GlobularSet const& domain);

enum class TypeErrorKind {
  UnknownGenerator,
  DimensionMismatch,
  NotParallel,
  NotFull,
  BadSubstitution,
};

std::string to_string(TypeErrorKind kind);

/// The first failure found by the checker, with a path into the offending term.
class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, std::string path, std::string const& detail);

  TypeErrorKind kind() const { return kind_; }
  std::string const& path() const { return path_; }

 private:
  TypeErrorKind kind_;
  std::string path_;
};

/// Returns the first failure, or nothing when the cell is well formed in c.
std::optional<TypeError> typecheck_cell(Computad const& c, Cell const& cell);
std::optional<TypeError> typecheck_sphere(Computad const& c, Sphere const& sphere);
/// Checks every attaching sphere against the generators below it.
std::optional<TypeError> typecheck_computad(Computad const& c);
/// Checks that sigma is a morphism from the free computad on `domain` into c.
std::optional<TypeError> typecheck_substitution(Computad const& c, GlobularSet const& domain,
                                                Substitution const& sigma);
/// Checks that sigma is a morphism of computads from `domain` into `codomain`.
std::optional<TypeError> typecheck_morphism(Computad const& domain, Computad const& codomain,
                                            Substitution const& sigma);

/// Throwing variant of typecheck_cell.
void check_cell(Computad const& c, Cell const& cell);

/// A finite sub-globular set of the cells of a computad, closed under boundaries. Its free
/// computad hosts "double" cells; generators are named "{<cell>}".
struct CellEnvironment {
  GlobularSet shape;
  std::map<CellId, Cell> cells;

  /// The generator standing for a cell of the environment.
  Cell quote(Cell const& cell) const;
};

CellEnvironment cell_environment(Computad const& c, std::vector<Cell> const& cells);

/// The evaluation map free(cell C) -> C restricted to the environment: each quoted generator
/// becomes its cell, coherences are rebuilt over the evaluated substitution.
/// Throws std::invalid_argument on a generator outside the environment.
Cell counit_eval(CellEnvironment const& env, Cell const& double_cell);

}  // namespace omegatt
