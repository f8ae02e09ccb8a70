#pragma once

#include <string>

#include <json.hpp>

#include "klrim/paths.hpp"
#include "klrim/rims.hpp"

/// JSON and text renderings of the library types.
namespace klrim {

using nlohmann::json;

json to_json(const Permutation& w);
json to_json(const Composition& lambda);
json to_json(const StandardYoungTableau& t);
/// {"nodes": [[r,c],...]}
json to_json(const Diagram& d);
/// {"nodes": [[r,c],...], "entries": [...]}
json to_json(const DTableau& t);
/// {"paths": [[[r,c],...],...]}
json to_json(const KPath& pi);
/// {"composition", "rim": [{"row_form","reduced_word","diagram","special"}], "cell_size"}
json to_json(const RimResult& rim);

/// Each parser throws std::invalid_argument on malformed input.
Permutation permutation_from_json(const json& j);
Diagram diagram_from_json(const json& j);
DTableau tableau_from_json(const json& j);
/// Reads "paths" and an optional "host" diagram ({"nodes": ...}); without
/// a host the support must itself be a principal diagram.
KPath kpath_from_json(const json& j);

/// "2,1,3" -> (2,1,3).
Composition parse_composition(const std::string& text);

/// One line per row, "×" for a node and "·" for an empty cell.
std::string render_grid(const Diagram& d);
std::string render_text(const RimResult& rim);

}  // namespace klrim
