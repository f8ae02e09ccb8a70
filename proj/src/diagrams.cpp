#include "klrim/diagrams.hpp"

#include <algorithm>
#include <string>

namespace klrim {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Diagram::Diagram(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("diagram must be nonempty");
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw std::invalid_argument("diagram has a repeated node");
  for (const auto& n : nodes_) {
    if (n.row < 1 || n.col < 1) throw std::invalid_argument("diagram coordinates are 1-based");
    rows_ = std::max(rows_, n.row);
    cols_ = std::max(cols_, n.col);
  }
  std::vector<bool> row_seen(idx(rows_) + 1, false);
  std::vector<bool> col_seen(idx(cols_) + 1, false);
  for (const auto& n : nodes_) {
    row_seen[idx(n.row)] = true;
    col_seen[idx(n.col)] = true;
  }
  for (int r = 1; r <= rows_; ++r)
    if (!row_seen[idx(r)]) throw std::invalid_argument("diagram has an empty row " + std::to_string(r));
  for (int c = 1; c <= cols_; ++c)
    if (!col_seen[idx(c)]) throw std::invalid_argument("diagram has an empty column " + std::to_string(c));
}

Diagram Diagram::young(const Composition& nu) {
  std::vector<Node> nodes;
  for (int i = 1; i <= nu.parts_count(); ++i)
    for (int j = 1; j <= nu[i]; ++j) nodes.push_back({i, j});
  return Diagram(std::move(nodes));
}

bool Diagram::contains(Node node) const { return std::binary_search(nodes_.begin(), nodes_.end(), node); }

std::optional<int> Diagram::index_of(Node node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

DTableau::DTableau(Diagram diagram, std::vector<int> entries)
    : diagram_(std::move(diagram)), entries_(std::move(entries)) {
  const int n = diagram_.size();
  if (static_cast<int>(entries_.size()) != n) throw std::invalid_argument("tableau needs one entry per node");
  std::vector<bool> seen(idx(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[idx(v)]) throw std::invalid_argument("tableau entries must be a bijection onto {1..n}");
    seen[idx(v)] = true;
  }
}

int DTableau::entry(Node node) const {
  auto i = diagram_.index_of(node);
  if (!i) throw std::invalid_argument("node not in tableau diagram");
  return entries_[idx(*i)];
}

Node DTableau::node_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) throw std::invalid_argument("value not in tableau");
  return diagram_.nodes()[idx(static_cast<int>(it - entries_.begin()))];
}

Composition row_composition(const Diagram& d) {
  std::vector<int> parts(idx(d.row_count()), 0);
  for (const auto& n : d.nodes()) ++parts[idx(n.row - 1)];
  return Composition(std::move(parts));
}

Composition column_composition(const Diagram& d) {
  std::vector<int> parts(idx(d.column_count()), 0);
  for (const auto& n : d.nodes()) ++parts[idx(n.col - 1)];
  return Composition(std::move(parts));
}

Partition conjugate(const Composition& lambda) {
  const int largest = *std::max_element(lambda.parts().begin(), lambda.parts().end());
  std::vector<int> parts(idx(largest), 0);
  for (int p : lambda.parts())
    for (int i = 0; i < p; ++i) ++parts[idx(i)];
  return Partition(std::move(parts));
}

bool is_special(const Diagram& d) {
  const auto& nodes = d.nodes();
  for (const auto& a : nodes)
    for (const auto& b : nodes) {
      if (a.row == b.row || a.col == b.col) continue;
      if (!d.contains({b.row, a.col}) && !d.contains({a.row, b.col})) return false;
    }
  return true;
}

DTableau row_fill(const Diagram& d) {
  std::vector<int> entries(idx(d.size()));
  for (int i = 0; i < d.size(); ++i) entries[idx(i)] = i + 1;
  return DTableau(d, std::move(entries));
}

DTableau column_fill(const Diagram& d) {
  std::vector<int> order(idx(d.size()));
  for (int i = 0; i < d.size(); ++i) order[idx(i)] = i;
  const auto& nodes = d.nodes();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = nodes[idx(a)];
    const auto& y = nodes[idx(b)];
    return x.col != y.col ? x.col < y.col : x.row < y.row;
  });
  std::vector<int> entries(idx(d.size()));
  for (int v = 0; v < d.size(); ++v) entries[idx(order[idx(v)])] = v + 1;
  return DTableau(d, std::move(entries));
}

Permutation w_of_diagram(const Diagram& d) {
  // t^D carries i at the i-th node in row-major order, so iw_D is the
  // column-fill entry of that node.
  return Permutation(column_fill(d).entries());
}

bool weakly_north_west(Node a, Node b) { return a.row <= b.row && a.col <= b.col; }

bool is_standard(const DTableau& t) {
  const auto& nodes = t.diagram().nodes();
  const auto& e = t.entries();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (weakly_north_west(nodes[i], nodes[j]) && e[i] > e[j]) return false;
  return true;
}

DTableau act(const DTableau& t, const Permutation& w) {
  if (w.size() != t.diagram().size()) throw std::invalid_argument("act: tableau and permutation sizes differ");
  std::vector<int> entries = t.entries();
  for (int& v : entries) v = w(v);
  return DTableau(t.diagram(), std::move(entries));
}

Diagram diagram_from_element(const Permutation& d, const Composition& lambda) {
  if (lambda.total() != d.size()) throw std::invalid_argument("diagram_from_element: composition does not sum to n");
  if (!is_coset_rep(d, lambda))
    throw std::invalid_argument("diagram_from_element: not a distinguished coset representative");
  const int n = d.size();
  // Row of each value: the lambda-block holding its position.
  std::vector<int> row_of(idx(n) + 1, 0);
  {
    int pos = 1;
    for (int r = 1; r <= lambda.parts_count(); ++r)
      for (int j = 0; j < lambda[r]; ++j) row_of[idx(d(pos++))] = r;
  }
  std::vector<int> last_col(idx(lambda.parts_count()) + 1, 0);
  std::vector<Node> nodes;
  nodes.reserve(idx(n));
  int prev_col = 0;
  int prev_row = 0;
  for (int e = 1; e <= n; ++e) {
    const int r = row_of[idx(e)];
    int c = std::max(last_col[idx(r)] + 1, prev_col);
    if (c == prev_col && r <= prev_row) ++c;
    nodes.push_back({r, c});
    last_col[idx(r)] = c;
    prev_col = c;
    prev_row = r;
  }
  Diagram result(std::move(nodes));
  if (w_of_diagram(result) != d) throw std::logic_error("diagram_from_element: postcondition w_D = d failed");
  return result;
}

StandardTableauGenerator::StandardTableauGenerator(Diagram d) : diagram_(std::move(d)) {
  const auto& nodes = diagram_.nodes();
  if (nodes.size() > 64) throw BoundExceeded("standard tableau enumeration supports at most 64 nodes");
  before_mask_.assign(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (i != j && weakly_north_west(nodes[j], nodes[i])) before_mask_[i] |= std::uint64_t{1} << j;
}

bool StandardTableauGenerator::search(int start) {
  const int n = diagram_.size();
  for (;;) {
    if (static_cast<int>(choice_.size()) == n) return true;
    int found = -1;
    for (int i = start; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(filled_ & bit) && (before_mask_[idx(i)] & ~filled_) == 0) {
        found = i;
        break;
      }
    }
    if (found >= 0) {
      choice_.push_back(found);
      filled_ |= std::uint64_t{1} << found;
      start = 0;
      continue;
    }
    if (choice_.empty()) return false;
    const int last = choice_.back();
    choice_.pop_back();
    filled_ &= ~(std::uint64_t{1} << last);
    start = last + 1;
  }
}

std::optional<DTableau> StandardTableauGenerator::next() {
  if (done_) return std::nullopt;
  bool ok = false;
  if (!started_) {
    started_ = true;
    ok = search(0);
  } else {
    const int last = choice_.back();
    choice_.pop_back();
    filled_ &= ~(std::uint64_t{1} << last);
    ok = search(last + 1);
  }
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  std::vector<int> entries(idx(diagram_.size()));
  for (std::size_t v = 0; v < choice_.size(); ++v) entries[idx(choice_[v])] = static_cast<int>(v) + 1;
  return DTableau(diagram_, std::move(entries));
}

std::vector<DTableau> standard_tableaux(const Diagram& d) {
  std::vector<DTableau> out;
  StandardTableauGenerator gen(d);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Permutation> prefixes_of_wD(const Diagram& d) {
  // t = t^D u means the i-th node (row-major) carries iu.
  std::vector<Permutation> out;
  StandardTableauGenerator gen(d);
  while (auto t = gen.next()) out.emplace_back(t->entries());
  std::sort(out.begin(), out.end());
  return out;
}

Word complete_prefix(const Permutation& u, const Diagram& d) {
  if (u.size() != d.size()) throw std::invalid_argument("complete_prefix: size mismatch");
  if (!is_standard(act(row_fill(d), u))) throw std::invalid_argument("complete_prefix: t^D u is not standard");
  const auto& nodes = d.nodes();
  const int n = d.size();
  // position_of[v] = node index carrying v in t^D u.
  std::vector<int> position_of(idx(n) + 1);
  for (int p = 1; p <= n; ++p) position_of[idx(u(p))] = p - 1;
  const Permutation target = w_of_diagram(d);
  auto current = u.row_form();
  Word word;
  for (;;) {
    int k = 0;
    for (int v = 1; v < n; ++v)
      if (nodes[idx(position_of[idx(v + 1)])].col < nodes[idx(position_of[idx(v)])].col) {
        k = v;
        break;
      }
    if (k == 0) break;
    word.push_back(k);
    std::swap(position_of[idx(k)], position_of[idx(k + 1)]);
    for (int& v : current) {
      if (v == k) v = k + 1;
      else if (v == k + 1) v = k;
    }
  }
  if (Permutation(current) != target) throw std::logic_error("complete_prefix: did not reach w_D");
  return word;
}

Partition subsequence_type(const Diagram& d) {
  return shape(compose(longest_parabolic_element(row_composition(d)), w_of_diagram(d)));
}

bool is_admissible(const Diagram& d) { return subsequence_type(d) == conjugate(row_composition(d)); }

Diagram rotate180(const Diagram& d) {
  std::vector<Node> nodes;
  nodes.reserve(d.nodes().size());
  for (const auto& n : d.nodes()) nodes.push_back({d.row_count() + 1 - n.row, d.column_count() + 1 - n.col});
  return Diagram(std::move(nodes));
}

}  // namespace klrim
