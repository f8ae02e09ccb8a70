#pragma once

#include <span>
#include <vector>

#include "klrim/diagrams.hpp"

/// k-paths in a diagram, the strict-left relation between node sets, and
/// the reordering of an arbitrary k-path into an equivalent ordered one.
namespace klrim {

/// Nodes with strictly increasing rows and weakly increasing columns.
using Path = std::vector<Node>;
/// A node set in canonical (row-major sorted) form.
using NodeSet = std::vector<Node>;

NodeSet make_node_set(std::vector<Node> nodes);
bool is_path(std::span<const Node> nodes);

/// A sequence of mutually disjoint paths inside a host diagram.
class KPath {
 public:
  /// Validates the path, disjointness and host-membership invariants.
  KPath(std::vector<Path> paths, Diagram host);

  const std::vector<Path>& paths() const { return paths_; }
  const Diagram& host() const { return host_; }
  int k() const { return static_cast<int>(paths_.size()); }
  /// Total number of nodes.
  int length() const;
  /// Path lengths in weakly decreasing order.
  std::vector<int> type() const;
  /// s(Pi), the union of the constituent supports.
  NodeSet support() const;

  friend bool operator==(const KPath&, const KPath&) = default;

 private:
  std::vector<Path> paths_;
  Diagram host_;
};

/// D1 ≺ D2: whenever (a1,b1) ∈ D1, (a2,b2) ∈ D2 and a1 <= a2, b1 < b2.
/// Throws on an empty operand.
bool precedes(std::span<const Node> d1, std::span<const Node> d2);

/// Membership predicate of the left side L(E) or right side R(E) of a
/// node set, relative to a host diagram (which supplies c_D).
class SideRegion {
 public:
  enum class Kind { left, right };

  SideRegion(Kind kind, NodeSet e, int host_columns);

  bool contains(Node node) const;
  /// sup of the columns of E on rows <= n, or 0.
  int gamma(int n) const;
  /// inf of the columns of E on rows >= n, or 1 + c_D.
  int delta(int n) const;

 private:
  Kind kind_;
  NodeSet e_;
  int host_columns_;
};

SideRegion left_side(std::span<const Node> e, const Diagram& host);
SideRegion right_side(std::span<const Node> e, const Diagram& host);

/// s(pi_i) ≺ s(pi_j) whenever i < j.
bool is_ordered(const KPath& pi);

struct PeelResult {
  Path path;
  NodeSet remainder;
};

/// Walks the rows of `nodes` top-down, taking the rightmost node of each
/// row and keeping it when no kept node lies further right. The remainder
/// satisfies remainder ≺ path.
PeelResult peel_path(std::span<const Node> nodes);

/// An ordered k'-path with the same support, k' <= k: paths are peeled
/// until nothing is left and listed in reverse peel order.
KPath order_kpath(const KPath& pi);
/// As above, then split constituents until exactly `k` paths remain.
/// Requires k' <= k <= length.
KPath order_kpath(const KPath& pi, int k);

/// Splits constituents of an ordered path in place (bottom nodes peel off
/// as singletons) until there are `k` of them. The result stays ordered.
KPath split_ordered(const KPath& ordered, int k);

/// D(Pi): every node of pi_j moves to column j on its own row. Requires an
/// ordered Pi whose support is the whole host. Checks that the relabelled
/// column filling of the host is a standard D(Pi)-tableau.
Diagram diagram_of_ordered(const KPath& pi);

/// The relabelled tableau t^{D(Pi)} w_host.
DTableau relabelled_column_fill(const KPath& pi);

/// Adds one node to an ordered path, either into the constituent that
/// sandwiches it in its column or as a new singleton constituent placed
/// after the longest run of constituents preceding it.
KPath insert_singleton(const KPath& pi, Node node);

/// Repeated insert_singleton. Throws if a constituent sandwiches a node.
KPath extend_by_singletons(const KPath& pi, std::span<const Node> nodes);

}  // namespace klrim
