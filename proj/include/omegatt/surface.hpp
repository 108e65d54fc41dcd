#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegatt/computad.hpp"
#include "omegatt/dimset.hpp"
#include "omegatt/homcat.hpp"

namespace omegatt {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

std::string to_string(SourceLoc loc);

/// Lexing and parsing failures.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourceLoc loc, std::string const& message);
  SourceLoc loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

/// Elaboration failures; `kind` is set when the cause is a typechecking error.
class ElabError : public std::runtime_error {
 public:
  ElabError(SourceLoc loc, std::string const& message, std::optional<TypeErrorKind> kind = std::nullopt);
  SourceLoc loc() const { return loc_; }
  std::optional<TypeErrorKind> kind() const { return kind_; }

 private:
  SourceLoc loc_;
  std::optional<TypeErrorKind> kind_;
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr const>;

struct Expr {
  enum class Kind { Name, Coh, Comp, Id, Susp, Op, HomFactor, Compose, HomLeaf };

  Kind kind = Kind::Name;
  SourceLoc loc;
  std::string name;
  Tree tree;
  ExprPtr src;
  ExprPtr tgt;
  std::vector<std::pair<std::string, ExprPtr>> sub;
  int n = 0;
  int k = 0;
  int m = 0;
  DimSet dims;
  std::vector<ExprPtr> args;
};

struct GeneratorDecl {
  std::string name;
  SourceLoc loc;
  /// Both null for a 0-generator.
  ExprPtr src;
  ExprPtr tgt;
};

struct Decl {
  enum class Kind { Computad, Let };

  Kind kind = Kind::Let;
  std::string name;
  SourceLoc loc;
  std::vector<GeneratorDecl> generators;
  ExprPtr value;
};

struct SourceFile {
  std::vector<Decl> decls;
};

SourceFile parse(std::string_view text);

/// Hom-level values remember the bipointed computad they live over and their generators.
struct HomContext {
  BipointedComputad base;
  std::map<std::string, Cell> generators;
};

struct Value {
  Cell cell;
  std::shared_ptr<Computad const> ambient;
  std::optional<HomContext> hom;
};

struct Declaration {
  Decl::Kind kind = Decl::Kind::Let;
  std::string name;
  SourceLoc loc;
  std::shared_ptr<Computad const> computad;
  std::optional<Value> value;
};

struct Program {
  std::vector<Declaration> decls;
};

/// Elaborates and typechecks every declaration. Identifiers resolve to earlier lets, then to
/// generators of the most recent computad. Throws ElabError.
Program elaborate(SourceFile const& file);

/// Canonical text. A let whose ambient differs from the computad printed last is preceded by
/// a declaration of its ambient named "<let>_ambient".
std::string print_program(Program const& p);
std::string print_computad(std::string const& name, Computad const& c);

}  // namespace omegatt
