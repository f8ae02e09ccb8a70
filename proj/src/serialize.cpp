#include "klrim/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace klrim {

namespace {

json node_array(const std::vector<Node>& nodes) {
  json out = json::array();
  for (const auto& n : nodes) out.push_back({n.row, n.col});
  return out;
}

std::vector<Node> nodes_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of [row, col] pairs");
  std::vector<Node> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
      throw std::invalid_argument("a node must be a [row, col] pair of integers");
    out.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return out;
}

std::vector<int> ints_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw std::invalid_argument("expected an integer");
    out.push_back(item.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

}  // namespace

json to_json(const Permutation& w) { return w.row_form(); }

json to_json(const Composition& lambda) { return lambda.parts(); }

json to_json(const StandardYoungTableau& t) { return t.rows(); }

json to_json(const Diagram& d) { return {{"nodes", node_array(d.nodes())}}; }

json to_json(const DTableau& t) {
  return {{"nodes", node_array(t.diagram().nodes())}, {"entries", t.entries()}};
}

json to_json(const KPath& pi) {
  json paths = json::array();
  for (const auto& p : pi.paths()) paths.push_back(node_array(p));
  return {{"paths", paths}};
}

json to_json(const RimResult& rim) {
  json elements = json::array();
  for (int i = 0; i < rim.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    elements.push_back({{"row_form", to_json(rim.rim[idx])},
                        {"reduced_word", reduced_word(rim.rim[idx])},
                        {"diagram", node_array(rim.diagrams[idx].nodes())},
                        {"special", static_cast<bool>(rim.special[idx])}});
  }
  return {{"composition", to_json(rim.composition)}, {"rim", elements}, {"cell_size", cell_size(rim.composition)}};
}

Permutation permutation_from_json(const json& j) { return Permutation(ints_from_json(j)); }

Diagram diagram_from_json(const json& j) { return Diagram(nodes_from_json(field(j, "nodes"))); }

DTableau tableau_from_json(const json& j) {
  const auto nodes = nodes_from_json(field(j, "nodes"));
  const auto entries = ints_from_json(field(j, "entries"));
  if (nodes.size() != entries.size()) throw std::invalid_argument("nodes and entries differ in length");
  Diagram d(nodes);
  std::vector<int> ordered(entries.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) ordered[static_cast<std::size_t>(*d.index_of(nodes[i]))] = entries[i];
  return DTableau(std::move(d), std::move(ordered));
}

KPath kpath_from_json(const json& j) {
  const json& paths_json = field(j, "paths");
  if (!paths_json.is_array()) throw std::invalid_argument("\"paths\" must be an array");
  std::vector<Path> paths;
  std::vector<Node> all;
  for (const auto& p : paths_json) {
    paths.push_back(nodes_from_json(p));
    all.insert(all.end(), paths.back().begin(), paths.back().end());
  }
  if (all.empty()) throw std::invalid_argument("k-path has no nodes");
  Diagram host = j.contains("host") ? diagram_from_json(j.at("host")) : Diagram(all);
  return KPath(std::move(paths), std::move(host));
}

Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last || value <= 0)
      throw std::invalid_argument("composition must be comma-separated positive integers: \"" + text + "\"");
    parts.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return Composition(std::move(parts));
}

std::string render_grid(const Diagram& d) {
  std::string out;
  for (int r = 1; r <= d.row_count(); ++r) {
    for (int c = 1; c <= d.column_count(); ++c) {
      if (c > 1) out += ' ';
      out += d.contains({r, c}) ? "×" : "·";
    }
    out += '\n';
  }
  return out;
}

std::string render_text(const RimResult& rim) {
  std::ostringstream out;
  out << "composition (" << join(rim.composition.parts(), ",") << ")\n";
  out << "rim size " << rim.size() << ", special " << rim.special_count() << ", cell size "
      << cell_size(rim.composition) << '\n';
  for (int i = 0; i < rim.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out << '\n'
        << "y = [" << join(rim.rim[idx].row_form(), ",") << "]  word (" << join(reduced_word(rim.rim[idx]), " ")
        << ")  " << (rim.special[idx] ? "special" : "not special") << '\n';
    out << render_grid(rim.diagrams[idx]);
  }
  return out.str();
}

}  // namespace klrim
