#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "omegatt/computad.hpp"
#include "omegatt/homcat.hpp"

namespace omegatt {

using Json = nlohmann::ordered_json;

/// {"dims": [[ids...], ...], "src": {...}, "tgt": {...}, "base": [x-, x+]?}; ids sorted.
Json to_json(GlobularSet const& x);
Json to_json(BipointedGlobularSet const& x);
GlobularSet globular_from_json(Json const& j);

/// {"var": name} or {"coh": {"tree", "sphere": {"src", "tgt"}, "sub": {pos: cell}}}.
Json to_json(Cell const& c);
Json to_json(Sphere const& s);
/// Generator dimensions are looked up in the ambient computad; coherence spheres are read
/// over the free computad on the positions of their tree.
Cell cell_from_json(Json const& j, Computad const& ambient);

/// {"generators": [{"name", "dim", "src"?, "tgt"?}, ...]} in dimension order.
Json to_json(Computad const& c);
Computad computad_from_json(Json const& j);

/// Mirrors the cell encoding with {"homgen": <underlying cell>} leaves.
Json to_json(HomCell const& h);
HomCell hom_cell_from_json(Json const& j, BipointedComputad const& base);

/// Graphviz rendering with one cluster per dimension.
std::string to_dot(Computad const& c, std::string const& name);
std::string to_dot(PastingScheme const& ps, std::string const& name);

}  // namespace omegatt
