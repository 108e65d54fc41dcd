#include "omegatt/io.hpp"

#include <sstream>

#include "omegatt/homcat.hpp"

namespace omegatt {

Json to_json(GlobularSet const& x) {
  Json dims = Json::array();
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    Json layer = Json::array();
    for (auto const& id : x.cells(d)) layer.push_back(id);
    dims.push_back(std::move(layer));
  }
  Json src = Json::object();
  Json tgt = Json::object();
  for (auto const& [k, v] : x.src_map()) src[k] = v;
  for (auto const& [k, v] : x.tgt_map()) tgt[k] = v;
  Json out = Json::object();
  out["dims"] = std::move(dims);
  out["src"] = std::move(src);
  out["tgt"] = std::move(tgt);
  return out;
}

Json to_json(BipointedGlobularSet const& x) {
  Json out = to_json(x.carrier);
  out["base"] = Json::array({x.base_minus, x.base_plus});
  return out;
}

GlobularSet globular_from_json(Json const& j) {
  GlobularSet out;
  auto const& dims = j.at("dims");
  for (std::size_t d = 0; d < dims.size(); ++d) {
    for (auto const& id : dims[d]) {
      auto name = id.get<std::string>();
      if (d == 0) {
        out.add_point(name);
      } else {
        out.add_cell(name, static_cast<int>(d), j.at("src").at(name).get<std::string>(),
                     j.at("tgt").at(name).get<std::string>());
      }
    }
  }
  out.validate();
  return out;
}

Json to_json(Sphere const& s) {
  Json out = Json::object();
  out["src"] = to_json(s.src);
  out["tgt"] = to_json(s.tgt);
  return out;
}

Json to_json(Cell const& c) {
  Json out = Json::object();
  if (c.is_var()) {
    out["var"] = c.name();
    return out;
  }
  Json sub = Json::object();
  for (auto const& [p, v] : c.sub()) sub[p] = to_json(v);
  Json body = Json::object();
  body["tree"] = to_string(c.tree());
  body["sphere"] = to_json(c.sphere());
  body["sub"] = std::move(sub);
  out["coh"] = std::move(body);
  return out;
}

Cell cell_from_json(Json const& j, Computad const& ambient) {
  if (j.contains("var")) return ambient.var(j.at("var").get<std::string>());
  auto const& body = j.at("coh");
  Tree tree = parse_tree(body.at("tree").get<std::string>());
  auto const pos = free_positions(tree);
  Sphere s{cell_from_json(body.at("sphere").at("src"), *pos), cell_from_json(body.at("sphere").at("tgt"), *pos)};
  Substitution sub;
  for (auto const& [p, v] : body.at("sub").items()) sub.emplace(p, cell_from_json(v, ambient));
  return Cell::coh(std::move(tree), std::move(s), std::move(sub));
}

Json to_json(Computad const& c) {
  Json gens = Json::array();
  for (int d = 0; d <= c.dimension_bound(); ++d) {
    for (auto const& name : c.names(d)) {
      auto const& g = c.at(name);
      Json entry = Json::object();
      entry["name"] = name;
      entry["dim"] = d;
      if (g.boundary) {
        entry["src"] = to_json(g.boundary->src);
        entry["tgt"] = to_json(g.boundary->tgt);
      }
      gens.push_back(std::move(entry));
    }
  }
  Json out = Json::object();
  out["generators"] = std::move(gens);
  return out;
}

Computad computad_from_json(Json const& j) {
  Computad out;
  for (auto const& entry : j.at("generators")) {
    auto name = entry.at("name").get<std::string>();
    int dim = entry.at("dim").get<int>();
    if (dim == 0) {
      out.add_generator(name, 0);
    } else {
      out.add_generator(name, dim, Sphere{cell_from_json(entry.at("src"), out), cell_from_json(entry.at("tgt"), out)});
    }
  }
  return out;
}

namespace {

Json hom_term_json(Cell const& term, HomCell const& h) {
  Json out = Json::object();
  if (term.is_var()) {
    out["homgen"] = to_json(h.generators.at(term.name()));
    return out;
  }
  Json sub = Json::object();
  for (auto const& [p, v] : term.sub()) sub[p] = hom_term_json(v, h);
  Json body = Json::object();
  body["tree"] = to_string(term.tree());
  body["sphere"] = to_json(term.sphere());
  body["sub"] = std::move(sub);
  out["coh"] = std::move(body);
  return out;
}

Cell hom_term_from_json(Json const& j, BipointedComputad const& base, HomCell& acc) {
  if (j.contains("homgen")) {
    Cell u = cell_from_json(j.at("homgen"), base.computad);
    acc.generators.emplace(hom_generator_name(u), u);
    return hom_generator(u);
  }
  auto const& body = j.at("coh");
  Tree tree = parse_tree(body.at("tree").get<std::string>());
  auto const pos = free_positions(tree);
  Sphere s{cell_from_json(body.at("sphere").at("src"), *pos), cell_from_json(body.at("sphere").at("tgt"), *pos)};
  Substitution sub;
  for (auto const& [p, v] : body.at("sub").items()) sub.emplace(p, hom_term_from_json(v, base, acc));
  return Cell::coh(std::move(tree), std::move(s), std::move(sub));
}

std::string quote(std::string const& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(HomCell const& h) { return hom_term_json(h.term, h); }

HomCell hom_cell_from_json(Json const& j, BipointedComputad const& base) {
  HomCell out;
  out.term = hom_term_from_json(j, base, out);
  return out;
}

std::string to_dot(Computad const& c, std::string const& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=LR;\n";
  std::map<std::string, std::string> derived;  // printed non-generator cell -> node id
  auto node_for = [&](Cell const& cell) -> std::string {
    if (cell.is_var()) return quote("gen:" + cell.name());
    auto text = print_cell(cell);
    auto it = derived.find(text);
    if (it != derived.end()) return it->second;
    auto id = quote("cell:" + std::to_string(derived.size()));
    derived.emplace(text, id);
    return id;
  };
  for (int d = 0; d <= c.dimension_bound(); ++d) {
    out << "  subgraph \"cluster_dim" << d << "\" {\n";
    out << "    label=\"dimension " << d << "\";\n";
    for (auto const& g : c.names(d)) out << "    " << quote("gen:" + g) << " [label=" << quote(g) << "];\n";
    out << "  }\n";
  }
  std::ostringstream edges;
  for (int d = 1; d <= c.dimension_bound(); ++d) {
    for (auto const& g : c.names(d)) {
      auto const& b = *c.at(g).boundary;
      edges << "  " << node_for(b.src) << " -> " << quote("gen:" + g) << " [label=\"src\"];\n";
      edges << "  " << quote("gen:" + g) << " -> " << node_for(b.tgt) << " [label=\"tgt\"];\n";
    }
  }
  std::map<std::string, std::string> by_id;
  for (auto const& [text, id] : derived) by_id.emplace(id, text);
  for (auto const& [id, text] : by_id) out << "  " << id << " [shape=box, label=" << quote(text) << "];\n";
  out << edges.str() << "}\n";
  return out.str();
}

std::string to_dot(PastingScheme const& ps, std::string const& name) {
  auto const& x = ps.scheme.carrier;
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  label=" << quote(to_string(ps.tree)) << ";\n";
  for (int d = 0; d <= x.dimension_bound(); ++d) {
    out << "  subgraph \"cluster_dim" << d << "\" {\n";
    out << "    label=\"dimension " << d << "\";\n";
    for (auto const& id : x.cells(d)) {
      out << "    " << quote(id);
      if (id == ps.scheme.base_minus || id == ps.scheme.base_plus) out << " [shape=doublecircle]";
      out << ";\n";
    }
    out << "  }\n";
  }
  for (int d = 1; d <= x.dimension_bound(); ++d) {
    for (auto const& id : x.cells(d)) {
      out << "  " << quote(x.src(id)) << " -> " << quote(id) << " [label=\"src\"];\n";
      out << "  " << quote(id) << " -> " << quote(x.tgt(id)) << " [label=\"tgt\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace omegatt
