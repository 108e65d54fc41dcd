#include "omegatt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "omegatt/io.hpp"
#include "omegatt/laws.hpp"
#include "omegatt/metaops.hpp"
#include "omegatt/oplib.hpp"
#include "omegatt/surface.hpp"

namespace omegatt {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reported with exit status 1.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Program load(std::string const& path) {
  auto const text = read_file(path);
  try {
    return elaborate(parse(text));
  } catch (SyntaxError const& e) {
    throw CheckFailure(path + ":" + e.what());
  } catch (ElabError const& e) {
    throw CheckFailure(path + ":" + e.what());
  }
}

using CellMapFn = std::function<Cell(Computad const&, Cell const&)>;
using ComputadMapFn = std::function<Computad(Computad const&)>;

// Applies a meta-operation to every declaration and rechecks the results.
Program transform(std::string const& path, Program const& p, std::string const& verb, ComputadMapFn const& on_computad,
                  CellMapFn const& on_cell) {
  Program out;
  std::map<Computad const*, std::shared_ptr<Computad const>> memo;
  auto image = [&](std::shared_ptr<Computad const> const& c) {
    auto& slot = memo[c.get()];
    if (!slot) slot = std::make_shared<Computad const>(on_computad(*c));
    return slot;
  };
  for (auto const& d : p.decls) {
    Declaration nd{d.kind, d.name, d.loc, nullptr, std::nullopt};
    try {
      if (d.kind == Decl::Kind::Computad) {
        nd.computad = image(d.computad);
        if (auto e = typecheck_computad(*nd.computad)) throw *e;
      } else {
        auto const& v = *d.value;
        if (v.hom) throw CheckFailure(verb + " does not apply to the hom-level let '" + d.name + "'");
        auto amb = image(v.ambient);
        Cell cell = on_cell(*v.ambient, v.cell);
        if (auto e = typecheck_cell(*amb, cell)) throw *e;
        nd.value = Value{std::move(cell), std::move(amb), std::nullopt};
      }
    } catch (CheckFailure const&) {
      throw;
    } catch (std::exception const& e) {
      throw CheckFailure(path + ":" + to_string(d.loc) + ": " + verb + " of '" + d.name + "' failed: " + e.what());
    }
    out.decls.push_back(std::move(nd));
  }
  return out;
}

void check_verb(std::string const& path, std::ostream& out) {
  auto const p = load(path);
  for (auto const& d : p.decls) {
    if (d.kind == Decl::Kind::Computad) {
      out << "computad " << d.name << ": " << d.computad->size() << " generators, ok\n";
      continue;
    }
    auto const& v = *d.value;
    out << "let " << d.name << ": " << v.cell.dim() << "-cell";
    if (v.hom) {
      out << " of hom(" << print_cell(v.hom->base.base_minus) << ", " << print_cell(v.hom->base.base_plus) << ")";
    }
    out << ", ok\n";
  }
}

Json program_json(Program const& p) {
  Json decls = Json::array();
  for (auto const& d : p.decls) {
    Json j = Json::object();
    if (d.kind == Decl::Kind::Computad) {
      j["computad"] = d.name;
      j["generators"] = to_json(*d.computad)["generators"];
    } else {
      auto const& v = *d.value;
      j["let"] = d.name;
      j["dim"] = v.cell.dim();
      if (v.hom) {
        j["base"] = Json::array({to_json(v.hom->base.base_minus), to_json(v.hom->base.base_plus)});
        j["hom"] = to_json(HomCell{v.cell, v.hom->generators});
      } else {
        j["cell"] = to_json(v.cell);
      }
    }
    decls.push_back(std::move(j));
  }
  Json out = Json::object();
  out["decls"] = std::move(decls);
  return out;
}

std::string program_dot(Program const& p) {
  std::string out;
  Computad const* last = nullptr;
  for (auto const& d : p.decls) {
    if (d.kind == Decl::Kind::Computad) {
      out += to_dot(*d.computad, d.name);
      last = d.computad.get();
      continue;
    }
    auto const& v = *d.value;
    Computad const& home = v.hom ? v.hom->base.computad : *v.ambient;
    if (!last || !(*last == home)) {
      out += to_dot(home, d.name + "_ambient");
      last = &home;
    }
  }
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic kernel for finite computads of weak omega-categories", "omegatt"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "Parse, elaborate and typecheck a .ctt file");
  check->add_option("file", file, "Source file")->required();

  auto* susp = app.add_subcommand("susp", "Suspend every computad and let of a file");
  susp->add_option("file", file, "Source file")->required();

  std::string dims;
  auto* op = app.add_subcommand("op", "Take opposites of every computad and let of a file");
  op->add_option("--dims", dims, "Comma-separated positive dimensions, e.g. 1,3")->required();
  op->add_option("file", file, "Source file")->required();

  auto* desusp = app.add_subcommand("desusp", "Desuspend every computad and let of a file");
  desusp->add_option("file", file, "Source file")->required();

  auto* id = app.add_subcommand("id", "Replace every let by its identity cell");
  id->add_option("file", file, "Source file")->required();

  int n = 0, k = 0, m = 0;
  auto* comp = app.add_subcommand("comp", "Print the composition coherence comp(n,k,m)");
  comp->add_option("n", n)->required();
  comp->add_option("k", k)->required();
  comp->add_option("m", m)->required();

  auto* eh = app.add_subcommand("eh", "Print the Eckmann-Hilton computad");

  std::string src_name, tgt_name, action, expr_text;
  auto* hom = app.add_subcommand("hom", "Factor a loop cell through the hom computad");
  hom->add_option("file", file, "Source file")->required();
  hom->add_option("--src", src_name, "Source basepoint")->required();
  hom->add_option("--tgt", tgt_name, "Target basepoint")->required();
  hom->add_option("action", action, "Only 'factor' is supported")->required()->check(CLI::IsMember({"factor"}));
  hom->add_option("expr", expr_text, "Cell expression over the last computad of the file")->required();

  std::string format = "json";
  std::string tree_text;
  auto* exp = app.add_subcommand("export", "Export a file (or a pasting scheme) as JSON or DOT");
  exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--tree", tree_text, "Export the pasting scheme of this tree instead of a file");
  exp->add_option("file", file, "Source file");

  LawOptions law_options;
  std::string only;
  bool timing = false;
  auto* laws = app.add_subcommand("laws", "Run the property harness");
  laws->add_option("--max-nodes", law_options.max_nodes, "Largest tree size enumerated")->check(CLI::Range(1, 8));
  laws->add_option("--dims-upto", law_options.dims_upto, "Opposites range over subsets of {1..K}")
      ->check(CLI::Range(0, 6));
  laws->add_option("--only", only, "Run only laws whose name starts with this prefix");
  laws->add_flag("--timing", timing, "Print the time spent on each law");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      check_verb(file, out);
    } else if (susp->parsed()) {
      auto p = transform(
          file, load(file), "susp", [](Computad const& c) { return suspend_computad(c).computad; },
          [](Computad const&, Cell const& c) { return suspend_cell(c); });
      out << print_program(p);
    } else if (op->parsed()) {
      DimSet w;
      try {
        w = DimSet::parse(dims);
      } catch (std::exception const& e) {
        throw UsageError(std::string("--dims: ") + e.what());
      }
      auto p = transform(
          file, load(file), "op", [&](Computad const& c) { return op_computad(w, c); },
          [&](Computad const&, Cell const& c) { return op_cell(w, c); });
      out << print_program(p);
    } else if (desusp->parsed()) {
      auto p = transform(
          file, load(file), "desusp", [](Computad const& c) { return desuspend_computad(c); },
          [](Computad const&, Cell const& c) { return desuspend_cell(c); });
      out << print_program(p);
    } else if (id->parsed()) {
      auto p = transform(
          file, load(file), "id", [](Computad const& c) { return c; },
          [](Computad const& amb, Cell const& c) { return identity_cell(amb, c); });
      out << print_program(p);
    } else if (comp->parsed()) {
      Cell c;
      try {
        c = comp_cell(n, k, m);
      } catch (std::invalid_argument const& e) {
        throw UsageError(e.what());
      }
      Program p;
      auto name = "comp_" + std::to_string(n) + "_" + std::to_string(k) + "_" + std::to_string(m);
      p.decls.push_back(Declaration{Decl::Kind::Let, name, {}, nullptr, Value{c, free_positions(c.tree()), std::nullopt}});
      out << print_program(p);
    } else if (eh->parsed()) {
      out << print_computad("Ceh", eh_computad().computad);
    } else if (hom->parsed()) {
      auto const text = read_file(file);
      // The expression is elaborated as a final let so it sees every declaration of the file.
      auto const src = text + "\nlet homarg__ = " + expr_text + "\n";
      Program p;
      try {
        p = elaborate(parse(src));
      } catch (SyntaxError const& e) {
        throw CheckFailure("hom: " + std::string(e.what()));
      } catch (ElabError const& e) {
        throw CheckFailure("hom: " + std::string(e.what()));
      }
      auto const& v = *p.decls.back().value;
      if (v.hom) throw CheckFailure("hom: the argument is already a hom-level cell");
      auto const& amb = *v.ambient;
      if (!amb.has(src_name) || !amb.has(tgt_name) || amb.at(src_name).dim != 0 || amb.at(tgt_name).dim != 0) {
        throw UsageError("hom: --src and --tgt must name 0-generators of the ambient computad");
      }
      BipointedComputad base{amb, amb.var(src_name), amb.var(tgt_name)};
      if (!is_loop_cell(base, v.cell)) {
        throw CheckFailure("hom: " + print_cell(v.cell) + " is not a cell of hom(" + src_name + ", " + tgt_name + ")");
      }
      auto const h = hom_factor(base, v.cell);
      if (auto e = typecheck_cell(hom_computad_fragment(base, h), h.term)) throw *e;
      Program result;
      auto frag = std::make_shared<Computad const>(hom_computad_fragment(base, h));
      result.decls.push_back(Declaration{Decl::Kind::Let, "factor", {}, nullptr,
                                         Value{h.term, frag, HomContext{base, h.generators}}});
      out << "# hom(" << src_name << ", " << tgt_name << ")\n";
      for (auto const& [name, u] : h.generators) out << "# generator " << name << " : " << u.dim() - 1 << "\n";
      out << print_program(result);
    } else if (exp->parsed()) {
      if (!tree_text.empty()) {
        if (!file.empty()) throw UsageError("export: give either --tree or a file, not both");
        Tree t;
        try {
          t = parse_tree(tree_text);
        } catch (std::invalid_argument const& e) {
          throw UsageError(e.what());
        }
        auto const& ps = positions(t);
        if (format == "json") {
          Json j = to_json(ps.scheme);
          out << j.dump(2) << "\n";
        } else {
          out << to_dot(ps, "Pos " + to_string(t));
        }
      } else {
        if (file.empty()) throw UsageError("export: missing file");
        auto const p = load(file);
        out << (format == "json" ? program_json(p).dump(2) + "\n" : program_dot(p));
      }
    } else if (laws->parsed()) {
      auto report = run_laws(law_options, only, [&](LawResult const& r) {
        out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
        if (r.failures) out << ", " << r.failures << " failed";
        out << ")";
        if (timing) out << " " << r.seconds << "s";
        out << "\n";
        for (auto const& s : r.samples) out << "  counterexample: " << s << "\n";
        out.flush();
      });
      if (report.laws.empty()) throw UsageError("laws: no law matches '" + only + "'");
      if (report.failures() == 0) {
        out << "all " << report.checks() << " checks passed\n";
      } else {
        out << report.failures() << " of " << report.checks() << " checks failed\n";
        return kExitCheckFailure;
      }
    }
  } catch (UsageError const& e) {
    err << "omegatt: " << e.what() << "\n";
    return kExitUsage;
  } catch (CheckFailure const& e) {
    err << e.what() << "\n";
    return kExitCheckFailure;
  } catch (TypeError const& e) {
    err << e.what() << "\n";
    return kExitCheckFailure;
  } catch (std::exception const& e) {
    err << "omegatt: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace omegatt
