#include "omegatt/surface.hpp"

#include <set>

#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"

namespace omegatt {

std::string to_string(SourceLoc loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.col); }

SyntaxError::SyntaxError(SourceLoc loc, std::string const& message)
    : std::runtime_error(to_string(loc) + ": syntax error: " + message), loc_(loc) {}

ElabError::ElabError(SourceLoc loc, std::string const& message, std::optional<TypeErrorKind> kind)
    : std::runtime_error(to_string(loc) + ": " + message), loc_(loc), kind_(kind) {}

namespace {

// ---- lexer

enum class Tok { Name, LBrace, RBrace, LBrack, RBrack, LParen, RParen, Comma, Semi, Colon, Star, Eq, Arrow, FatArrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Name: return "a name";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::FatArrow: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool name_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '.' || c == '\'' || c >= 0x80;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t i = 0;
  auto advance = [&] {
    unsigned char c = text[i++];
    if (c == '\n') {
      ++loc.line;
      loc.col = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++loc.col;
    }
  };
  while (i < text.size()) {
    unsigned char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    SourceLoc start = loc;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, static_cast<char>(c)), start});
      advance();
    };
    switch (c) {
      case '{': single(Tok::LBrace); continue;
      case '}': single(Tok::RBrace); continue;
      case '[': single(Tok::LBrack); continue;
      case ']': single(Tok::RBrack); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case ';': single(Tok::Semi); continue;
      case ':': single(Tok::Colon); continue;
      case '*': single(Tok::Star); continue;
      default: break;
    }
    if (c == '-' || c == '=') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        advance();
        advance();
        out.push_back({c == '-' ? Tok::Arrow : Tok::FatArrow, c == '-' ? "->" : "=>", start});
        continue;
      }
      if (c == '=') {
        single(Tok::Eq);
        continue;
      }
    }
    if (name_char(c)) {
      std::size_t begin = i;
      while (i < text.size() && name_char(static_cast<unsigned char>(text[i]))) advance();
      out.push_back({Tok::Name, std::string(text.substr(begin, i - begin)), start});
      continue;
    }
    throw SyntaxError(start, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
  }
  out.push_back({Tok::End, "", loc});
  return out;
}

// ---- parser

std::set<std::string> const kKeywords = {"computad", "let", "coh", "comp", "id", "susp", "op", "homfactor", "compose"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SourceFile file() {
    SourceFile out;
    while (peek().kind != Tok::End) {
      auto const& t = peek();
      if (t.kind == Tok::Name && t.text == "computad") {
        out.decls.push_back(computad());
      } else if (t.kind == Tok::Name && t.text == "let") {
        out.decls.push_back(let());
      } else {
        throw SyntaxError(t.loc, "expected 'computad' or 'let', found " + show(t));
      }
    }
    return out;
  }

  ExprPtr expr() {
    auto const& t = peek();
    if (t.kind == Tok::LBrace) {
      auto e = node(Expr::Kind::HomLeaf, next().loc);
      e->args.push_back(expr());
      expect(Tok::RBrace);
      return e;
    }
    if (t.kind != Tok::Name) throw SyntaxError(t.loc, "expected an expression, found " + show(t));
    if (t.text == "coh") return coh();
    if (t.text == "comp") return comp();
    if (t.text == "id") return unary(Expr::Kind::Id);
    if (t.text == "susp") return unary(Expr::Kind::Susp);
    if (t.text == "homfactor") return unary(Expr::Kind::HomFactor);
    if (t.text == "op") return op();
    if (t.text == "compose") return compose();
    if (kKeywords.count(t.text)) throw SyntaxError(t.loc, "unexpected keyword '" + t.text + "'");
    auto e = node(Expr::Kind::Name, t.loc);
    e->name = next().text;
    return e;
  }

 private:
  static std::string show(Token const& t) { return t.kind == Tok::Name ? "'" + t.text + "'" : describe(t.kind); }

  Token const& peek() const { return toks_[pos_]; }
  Token const& next() { return toks_[pos_++]; }

  Token const& expect(Tok kind) {
    if (peek().kind != kind) throw SyntaxError(peek().loc, "expected " + describe(kind) + ", found " + show(peek()));
    return next();
  }

  void keyword(std::string const& word) {
    if (peek().kind != Tok::Name || peek().text != word) {
      throw SyntaxError(peek().loc, "expected '" + word + "', found " + show(peek()));
    }
    next();
  }

  std::string identifier() {
    auto const& t = expect(Tok::Name);
    if (kKeywords.count(t.text)) throw SyntaxError(t.loc, "keyword '" + t.text + "' used as a name");
    return t.text;
  }

  int number() {
    auto const& t = expect(Tok::Name);
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos || t.text.size() > 6) {
      throw SyntaxError(t.loc, "expected a number, found '" + t.text + "'");
    }
    return std::stoi(t.text);
  }

  static std::shared_ptr<Expr> node(Expr::Kind kind, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->loc = loc;
    return e;
  }

  Decl computad() {
    Decl d;
    d.kind = Decl::Kind::Computad;
    d.loc = peek().loc;
    keyword("computad");
    d.name = identifier();
    expect(Tok::LBrace);
    while (peek().kind != Tok::RBrace) {
      GeneratorDecl g;
      g.loc = peek().loc;
      g.name = identifier();
      expect(Tok::Colon);
      if (peek().kind == Tok::Star) {
        next();
      } else {
        g.src = expr();
        expect(Tok::Arrow);
        g.tgt = expr();
      }
      d.generators.push_back(std::move(g));
      if (peek().kind == Tok::Semi) {
        next();
      } else if (peek().kind != Tok::RBrace) {
        throw SyntaxError(peek().loc, "expected ';' or '}', found " + show(peek()));
      }
    }
    expect(Tok::RBrace);
    return d;
  }

  Decl let() {
    Decl d;
    d.kind = Decl::Kind::Let;
    d.loc = peek().loc;
    keyword("let");
    d.name = identifier();
    expect(Tok::Eq);
    d.value = expr();
    return d;
  }

  Tree tree() {
    expect(Tok::LBrack);
    Tree t;
    if (peek().kind == Tok::RBrack) {
      next();
      return t;
    }
    for (;;) {
      t.children.push_back(tree());
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RBrack);
      return t;
    }
  }

  std::vector<std::pair<std::string, ExprPtr>> substitution() {
    std::vector<std::pair<std::string, ExprPtr>> out;
    expect(Tok::LBrack);
    if (peek().kind == Tok::RBrack) {
      next();
      return out;
    }
    for (;;) {
      auto const& key = expect(Tok::Name);
      for (auto const& [seen, _] : out) {
        if (seen == key.text) throw SyntaxError(key.loc, "position '" + key.text + "' bound twice");
      }
      expect(Tok::FatArrow);
      out.emplace_back(key.text, expr());
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RBrack);
      return out;
    }
  }

  ExprPtr coh() {
    auto e = node(Expr::Kind::Coh, next().loc);
    e->tree = tree();
    expect(Tok::LBrace);
    e->src = expr();
    expect(Tok::Arrow);
    e->tgt = expr();
    expect(Tok::RBrace);
    e->sub = substitution();
    return e;
  }

  ExprPtr comp() {
    auto e = node(Expr::Kind::Comp, next().loc);
    expect(Tok::LParen);
    e->n = number();
    expect(Tok::Comma);
    e->k = number();
    expect(Tok::Comma);
    e->m = number();
    expect(Tok::RParen);
    e->sub = substitution();
    return e;
  }

  ExprPtr unary(Expr::Kind kind) {
    auto e = node(kind, next().loc);
    expect(Tok::LParen);
    e->args.push_back(expr());
    expect(Tok::RParen);
    return e;
  }

  ExprPtr op() {
    auto e = node(Expr::Kind::Op, next().loc);
    expect(Tok::LBrace);
    std::set<int> dims;
    if (peek().kind != Tok::RBrace) {
      for (;;) {
        auto loc = peek().loc;
        int d = number();
        if (d < 1) throw SyntaxError(loc, "opposite dimensions must be positive");
        dims.insert(d);
        if (peek().kind != Tok::Comma) break;
        next();
      }
    }
    expect(Tok::RBrace);
    e->dims = DimSet(dims);
    expect(Tok::LParen);
    e->args.push_back(expr());
    expect(Tok::RParen);
    return e;
  }

  ExprPtr compose() {
    auto e = node(Expr::Kind::Compose, next().loc);
    expect(Tok::LParen);
    e->args.push_back(expr());
    expect(Tok::Comma);
    e->k = number();
    expect(Tok::Comma);
    e->args.push_back(expr());
    expect(Tok::RParen);
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- elaboration

using ComputadPtr = std::shared_ptr<Computad const>;

struct Scope {
  ComputadPtr current = std::make_shared<Computad const>();
  std::map<std::string, Value> lets;
};

[[noreturn]] void type_failure(SourceLoc loc, std::string const& what, TypeError const& e) {
  throw ElabError(loc, what + ": " + e.what(), e.kind());
}

void require_typed(SourceLoc loc, Computad const& c, Cell const& cell) {
  if (auto err = typecheck_cell(c, cell)) type_failure(loc, "ill-typed cell", *err);
}

bool same_computad(ComputadPtr const& a, ComputadPtr const& b) { return a == b || *a == *b; }

ComputadPtr hom_ambient(HomContext const& h, Cell const& term) {
  return std::make_shared<Computad const>(hom_computad_fragment(h.base, HomCell{term, h.generators}));
}

class Elaborator {
 public:
  Value eval(Expr const& e, Scope const& scope) {
    switch (e.kind) {
      case Expr::Kind::Name: return name(e, scope);
      case Expr::Kind::Coh: return coh(e, scope);
      case Expr::Kind::Comp: return comp(e, scope);
      case Expr::Kind::Id: {
        auto v = eval(*e.args[0], scope);
        return rewrap(e, v, guard(e, [&] { return identity_cell(*v.ambient, v.cell); }));
      }
      case Expr::Kind::Compose: {
        auto lhs = eval(*e.args[0], scope);
        auto rhs = eval(*e.args[1], scope);
        auto ctx = merge(e.loc, {&lhs, &rhs});
        // Hom-level arguments may each know only part of the generators.
        auto amb = ctx ? hom_ambient(*ctx, lhs.cell) : lhs.ambient;
        auto cell = guard(e, [&] { return omegatt::compose(*amb, lhs.cell, e.k, rhs.cell); });
        return finish(e.loc, cell, lhs.ambient, std::move(ctx));
      }
      case Expr::Kind::Susp: {
        auto v = plain(e, eval(*e.args[0], scope), "susp");
        auto amb = std::make_shared<Computad const>(suspend_computad(*v.ambient).computad);
        return finish(e.loc, suspend_cell(v.cell), amb, std::nullopt);
      }
      case Expr::Kind::Op: {
        auto v = plain(e, eval(*e.args[0], scope), "op");
        auto amb = std::make_shared<Computad const>(op_computad(e.dims, *v.ambient));
        return finish(e.loc, op_cell(e.dims, v.cell), amb, std::nullopt);
      }
      case Expr::Kind::HomFactor: {
        auto v = plain(e, eval(*e.args[0], scope), "homfactor");
        auto base = bipoint(e, v);
        auto h = guard(e, [&] { return hom_factor(base, v.cell); });
        HomContext ctx{std::move(base), std::move(h.generators)};
        auto amb = hom_ambient(ctx, h.term);
        return finish(e.loc, h.term, amb, std::move(ctx));
      }
      case Expr::Kind::HomLeaf: {
        auto v = plain(e, eval(*e.args[0], scope), "a hom generator");
        auto base = bipoint(e, v);
        if (!is_indecomposable(base, v.cell)) {
          throw ElabError(e.loc, "hom generator " + print_cell(v.cell) + " is decomposable");
        }
        HomContext ctx{std::move(base), {{hom_generator_name(v.cell), v.cell}}};
        Cell term = hom_generator(v.cell);
        auto amb = hom_ambient(ctx, term);
        return finish(e.loc, term, amb, std::move(ctx));
      }
    }
    throw std::logic_error("unreachable");
  }

 private:
  template <typename F>
  auto guard(Expr const& e, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (TypeError const& err) {
      type_failure(e.loc, "ill-typed cell", err);
    } catch (std::exception const& err) {
      throw ElabError(e.loc, err.what());
    }
  }

  static Value plain(Expr const& e, Value v, std::string const& what) {
    if (v.hom) throw ElabError(e.loc, what + " is not supported on hom-level values");
    return v;
  }

  // The basepoints of a loop are read off its own 0-boundary.
  static BipointedComputad bipoint(Expr const& e, Value const& v) {
    if (v.cell.dim() < 1) throw ElabError(e.loc, "expected a cell of positive dimension");
    return BipointedComputad{*v.ambient, src_k(*v.ambient, v.cell, 0), tgt_k(*v.ambient, v.cell, 0)};
  }

  static std::optional<HomContext> merge(SourceLoc loc, std::vector<Value const*> const& parts) {
    std::optional<HomContext> out;
    ComputadPtr amb;
    for (auto const* v : parts) {
      if (!amb) {
        amb = v->ambient;
      } else if (!v->hom && !same_computad(amb, v->ambient)) {
        throw ElabError(loc, "arguments live over different computads");
      }
      if (!v->hom) continue;
      if (!out) {
        out = *v->hom;
        continue;
      }
      if (!(out->base == v->hom->base)) throw ElabError(loc, "hom-level arguments have different basepoints");
      out->generators.insert(v->hom->generators.begin(), v->hom->generators.end());
    }
    bool mixed = false;
    for (auto const* v : parts) mixed |= static_cast<bool>(v->hom) != static_cast<bool>(out);
    if (mixed) throw ElabError(loc, "cannot mix hom-level and ordinary cells");
    return out;
  }

  static Value finish(SourceLoc loc, Cell cell, ComputadPtr amb, std::optional<HomContext> hom) {
    if (hom) amb = hom_ambient(*hom, cell);
    require_typed(loc, *amb, cell);
    return Value{std::move(cell), std::move(amb), std::move(hom)};
  }

  Value rewrap(Expr const& e, Value const& v, Cell cell) {
    return finish(e.loc, std::move(cell), v.ambient, v.hom);
  }

  static Value name(Expr const& e, Scope const& scope) {
    if (auto it = scope.lets.find(e.name); it != scope.lets.end()) return it->second;
    if (!scope.current->has(e.name)) {
      throw ElabError(e.loc, "unknown name '" + e.name + "'", TypeErrorKind::UnknownGenerator);
    }
    return Value{scope.current->var(e.name), scope.current, std::nullopt};
  }

  Substitution bindings(Expr const& e, Scope const& scope, ComputadPtr& amb, std::optional<HomContext>& hom) {
    std::vector<Value> values;
    Substitution sub;
    for (auto const& [p, x] : e.sub) {
      values.push_back(eval(*x, scope));
      sub.emplace(p, values.back().cell);
    }
    std::vector<Value const*> parts;
    for (auto const& v : values) parts.push_back(&v);
    hom = merge(e.loc, parts);
    amb = values.front().ambient;
    return sub;
  }

  Value coh(Expr const& e, Scope const& scope) {
    auto pos = free_positions(e.tree);
    Scope inner;
    inner.current = pos;
    Sphere sphere{eval(*e.src, inner).cell, eval(*e.tgt, inner).cell};
    if (e.sub.empty()) {
      return finish(e.loc, Cell::coh(e.tree, std::move(sphere), identity_substitution(e.tree)), pos, std::nullopt);
    }
    ComputadPtr amb;
    std::optional<HomContext> hom;
    auto sub = bindings(e, scope, amb, hom);
    return finish(e.loc, Cell::coh(e.tree, std::move(sphere), std::move(sub)), amb, std::move(hom));
  }

  Value comp(Expr const& e, Scope const& scope) {
    Cell tmpl = guard(e, [&] { return comp_cell(e.n, e.k, e.m); });
    if (e.sub.empty()) return finish(e.loc, tmpl, free_positions(tmpl.tree()), std::nullopt);
    ComputadPtr amb;
    std::optional<HomContext> hom;
    auto sub = bindings(e, scope, amb, hom);
    return finish(e.loc, Cell::coh(tmpl.tree(), tmpl.sphere(), std::move(sub)), amb, std::move(hom));
  }
};

}  // namespace

SourceFile parse(std::string_view text) {
  Parser p(lex(text));
  return p.file();
}

Program elaborate(SourceFile const& file) {
  Program out;
  Scope scope;
  Elaborator elab;
  std::set<std::string> names;
  for (auto const& d : file.decls) {
    if (!names.insert(d.name).second) throw ElabError(d.loc, "name '" + d.name + "' declared twice");
    if (d.kind == Decl::Kind::Computad) {
      auto c = std::make_shared<Computad>();
      for (auto const& g : d.generators) {
        if (c->has(g.name)) throw ElabError(g.loc, "generator '" + g.name + "' declared twice");
        if (!g.src) {
          c->add_generator(g.name, 0);
          continue;
        }
        Scope local;
        local.current = c;
        auto s = elab.eval(*g.src, local);
        auto t = elab.eval(*g.tgt, local);
        if (s.hom || t.hom || !same_computad(s.ambient, c) || !same_computad(t.ambient, c)) {
          throw ElabError(g.loc, "attachment of '" + g.name + "' must be built from earlier generators");
        }
        Sphere sphere{s.cell, t.cell};
        if (auto err = typecheck_sphere(*c, sphere)) type_failure(g.loc, "attachment of '" + g.name + "'", *err);
        c->add_generator(g.name, s.cell.dim() + 1, sphere);
      }
      scope.current = c;
      out.decls.push_back(Declaration{d.kind, d.name, d.loc, c, std::nullopt});
      continue;
    }
    auto v = elab.eval(*d.value, scope);
    scope.lets.emplace(d.name, v);
    out.decls.push_back(Declaration{d.kind, d.name, d.loc, nullptr, std::move(v)});
  }
  return out;
}

std::string print_computad(std::string const& name, Computad const& c) {
  std::string out = "computad " + name + " {\n";
  for (int d = 0; d <= c.dimension_bound(); ++d) {
    for (auto const& g : c.names(d)) {
      out += "  " + g + " : ";
      auto const& gen = c.at(g);
      out += gen.boundary ? print_sphere(*gen.boundary) : "*";
      out += " ;\n";
    }
  }
  return out + "}\n";
}

std::string print_program(Program const& p) {
  std::string out;
  Computad const* last = nullptr;
  auto emit = [&](std::string text) {
    if (!out.empty()) out += "\n";
    out += text;
  };
  for (auto const& d : p.decls) {
    if (d.kind == Decl::Kind::Computad) {
      emit(print_computad(d.name, *d.computad));
      last = d.computad.get();
      continue;
    }
    auto const& v = *d.value;
    Computad const& home = v.hom ? v.hom->base.computad : *v.ambient;
    if (!last || !(*last == home)) {
      emit(print_computad(d.name + "_ambient", home));
      last = &home;
    }
    emit("let " + d.name + " = " + print_cell(v.cell) + "\n");
  }
  return out;
}

}  // namespace omegatt
