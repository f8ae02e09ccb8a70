#include "klrim/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrim {

NodeSet make_node_set(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

bool is_path(std::span<const Node> nodes) {
  if (nodes.empty()) return false;
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i - 1].row < nodes[i].row && nodes[i - 1].col <= nodes[i].col)) return false;
  return true;
}

KPath::KPath(std::vector<Path> paths, Diagram host) : paths_(std::move(paths)), host_(std::move(host)) {
  if (paths_.empty()) throw std::invalid_argument("k-path needs at least one constituent");
  std::vector<Node> all;
  for (const auto& p : paths_) {
    if (!is_path(p)) throw std::invalid_argument("constituent is not a path");
    for (const auto& n : p) {
      if (!host_.contains(n)) throw std::invalid_argument("k-path node outside host diagram");
      all.push_back(n);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("constituent paths are not disjoint");
}

int KPath::length() const {
  int total = 0;
  for (const auto& p : paths_) total += static_cast<int>(p.size());
  return total;
}

std::vector<int> KPath::type() const {
  std::vector<int> t;
  for (const auto& p : paths_) t.push_back(static_cast<int>(p.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

NodeSet KPath::support() const {
  std::vector<Node> all;
  for (const auto& p : paths_) all.insert(all.end(), p.begin(), p.end());
  return make_node_set(std::move(all));
}

bool precedes(std::span<const Node> d1, std::span<const Node> d2) {
  if (d1.empty() || d2.empty()) throw std::invalid_argument("precedes: empty operand");
  // Sweep d2 by row, tracking the largest column of d1 on rows at or above.
  std::vector<Node> first(d1.begin(), d1.end());
  std::vector<Node> second(d2.begin(), d2.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  std::size_t i = 0;
  int reach = 0;
  for (const auto& node : second) {
    while (i < first.size() && first[i].row <= node.row) reach = std::max(reach, first[i++].col);
    if (node.col <= reach) return false;
  }
  return true;
}

SideRegion::SideRegion(Kind kind, NodeSet e, int host_columns)
    : kind_(kind), e_(std::move(e)), host_columns_(host_columns) {
  if (e_.empty()) throw std::invalid_argument("side of an empty node set");
}

int SideRegion::gamma(int n) const {
  int best = 0;
  for (const auto& node : e_)
    if (node.row <= n) best = std::max(best, node.col);
  return best;
}

int SideRegion::delta(int n) const {
  int best = host_columns_ + 1;
  for (const auto& node : e_)
    if (node.row >= n) best = std::min(best, node.col);
  return best;
}

bool SideRegion::contains(Node node) const {
  return kind_ == Kind::left ? node.col < delta(node.row) : node.col > gamma(node.row);
}

SideRegion left_side(std::span<const Node> e, const Diagram& host) {
  return SideRegion(SideRegion::Kind::left, make_node_set({e.begin(), e.end()}), host.column_count());
}

SideRegion right_side(std::span<const Node> e, const Diagram& host) {
  return SideRegion(SideRegion::Kind::right, make_node_set({e.begin(), e.end()}), host.column_count());
}

bool is_ordered(const KPath& pi) {
  const auto& paths = pi.paths();
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (!precedes(paths[i], paths[j])) return false;
  return true;
}

PeelResult peel_path(std::span<const Node> nodes) {
  if (nodes.empty()) throw std::invalid_argument("peel_path: empty node set");
  NodeSet remaining = make_node_set({nodes.begin(), nodes.end()});
  PeelResult result;
  int kept_max = 0;
  std::size_t i = 0;
  while (i < remaining.size()) {
    // Row-major order puts the rightmost node of the row last.
    std::size_t end = i;
    while (end < remaining.size() && remaining[end].row == remaining[i].row) ++end;
    const Node candidate = remaining[end - 1];
    if (candidate.col >= kept_max) {
      result.path.push_back(candidate);
      kept_max = candidate.col;
      for (std::size_t j = i; j + 1 < end; ++j) result.remainder.push_back(remaining[j]);
    } else {
      for (std::size_t j = i; j < end; ++j) result.remainder.push_back(remaining[j]);
    }
    i = end;
  }
  return result;
}

KPath order_kpath(const KPath& pi) {
  std::vector<Path> peeled;
  NodeSet rest = pi.support();
  while (!rest.empty()) {
    auto step = peel_path(rest);
    peeled.push_back(std::move(step.path));
    rest = std::move(step.remainder);
  }
  std::reverse(peeled.begin(), peeled.end());
  return KPath(std::move(peeled), pi.host());
}

KPath order_kpath(const KPath& pi, int k) {
  KPath ordered = order_kpath(pi);
  if (k < ordered.k()) throw std::invalid_argument("order_kpath: fewer constituents requested than the ordering needs");
  return split_ordered(ordered, k);
}

KPath split_ordered(const KPath& ordered, int k) {
  if (k > ordered.length()) throw std::invalid_argument("split_ordered: more constituents than nodes");
  std::vector<Path> paths = ordered.paths();
  while (static_cast<int>(paths.size()) < k) {
    auto it = std::find_if(paths.begin(), paths.end(), [](const Path& p) { return p.size() >= 2; });
    const Path whole = *it;
    const std::size_t pieces = std::min<std::size_t>(static_cast<std::size_t>(k) - paths.size() + 1, whole.size());
    // Bottom nodes first as singletons, then the remaining top segment.
    std::vector<Path> split;
    for (std::size_t i = 1; i < pieces; ++i) split.push_back({whole[whole.size() - i]});
    split.emplace_back(whole.begin(), whole.end() - static_cast<std::ptrdiff_t>(pieces - 1));
    it = paths.erase(it);
    paths.insert(it, split.begin(), split.end());
  }
  return KPath(std::move(paths), ordered.host());
}

DTableau relabelled_column_fill(const KPath& pi) {
  if (!is_ordered(pi)) throw std::invalid_argument("relabelling needs an ordered k-path");
  if (pi.support() != pi.host().nodes()) throw std::invalid_argument("relabelling needs a full-support k-path");
  const DTableau fill = column_fill(pi.host());
  std::vector<Node> moved;
  std::vector<int> values;
  for (std::size_t j = 0; j < pi.paths().size(); ++j)
    for (const auto& node : pi.paths()[j]) {
      moved.push_back({node.row, static_cast<int>(j) + 1});
      values.push_back(fill.entry(node));
    }
  Diagram target(moved);
  std::vector<int> entries(values.size());
  for (std::size_t i = 0; i < moved.size(); ++i) entries[static_cast<std::size_t>(*target.index_of(moved[i]))] = values[i];
  return DTableau(std::move(target), std::move(entries));
}

Diagram diagram_of_ordered(const KPath& pi) {
  DTableau t = relabelled_column_fill(pi);
  if (!is_standard(t)) throw std::logic_error("diagram_of_ordered: relabelled tableau is not standard");
  return t.diagram();
}

namespace {

bool sandwiches(const Path& path, Node node) {
  bool above = false;
  bool beneath = false;
  for (const auto& n : path) {
    if (n.col != node.col) continue;
    if (n.row < node.row) above = true;
    if (n.row > node.row) beneath = true;
  }
  return above && beneath;
}

}  // namespace

KPath insert_singleton(const KPath& pi, Node node) {
  if (!pi.host().contains(node)) throw std::invalid_argument("insert_singleton: node outside host");
  const NodeSet support = pi.support();
  if (std::binary_search(support.begin(), support.end(), node))
    throw std::invalid_argument("insert_singleton: node already covered");
  if (!is_ordered(pi)) throw std::invalid_argument("insert_singleton: k-path is not ordered");
  std::vector<Path> paths = pi.paths();
  for (auto& path : paths)
    if (sandwiches(path, node)) {
      path.insert(std::lower_bound(path.begin(), path.end(), node), node);
      return KPath(std::move(paths), pi.host());
    }
  const Node single[] = {node};
  std::size_t l = 0;
  while (l < paths.size() && precedes(paths[l], single)) ++l;
  paths.insert(paths.begin() + static_cast<std::ptrdiff_t>(l), Path{node});
  return KPath(std::move(paths), pi.host());
}

KPath extend_by_singletons(const KPath& pi, std::span<const Node> nodes) {
  for (const auto& node : nodes)
    for (const auto& path : pi.paths())
      if (sandwiches(path, node)) throw std::invalid_argument("extend_by_singletons: a constituent sandwiches a node");
  KPath current = pi;
  for (const auto& node : nodes) current = insert_singleton(current, node);
  return current;
}

}  // namespace klrim
