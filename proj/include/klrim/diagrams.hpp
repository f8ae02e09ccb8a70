#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "klrim/symcore.hpp"

/// Principal diagrams, their row and column fillings, the element w_D,
/// standard D-tableaux, the canonical diagram D(d, lambda) of a coset
/// representative, and subsequence types.
namespace klrim {

/// A grid cell, 1-based, rows top to bottom and columns left to right.
struct Node {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Node&, const Node&) = default;
};

/// A nonempty node set without empty rows or columns. Nodes are kept
/// sorted in row-major order, so equality and serialization are canonical.
class Diagram {
 public:
  explicit Diagram(std::vector<Node> nodes);

  /// The Young diagram V(nu).
  static Diagram young(const Composition& nu);

  const std::vector<Node>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int row_count() const { return rows_; }
  int column_count() const { return cols_; }
  bool contains(Node node) const;
  /// Position of `node` in row-major order (its entry in t^D minus one).
  std::optional<int> index_of(Node node) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram& a, const Diagram& b) { return a.nodes_ <=> b.nodes_; }

 private:
  std::vector<Node> nodes_;
  int rows_ = 0;
  int cols_ = 0;
};

/// A bijection from the nodes of a diagram to {1..n}; `entries()[i]` is
/// the entry at `diagram().nodes()[i]`.
class DTableau {
 public:
  DTableau(Diagram diagram, std::vector<int> entries);

  const Diagram& diagram() const { return diagram_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry(Node node) const;
  /// The node carrying `value`.
  Node node_of(int value) const;

  friend bool operator==(const DTableau&, const DTableau&) = default;

 private:
  Diagram diagram_;
  std::vector<int> entries_;
};

Composition row_composition(const Diagram& d);
Composition column_composition(const Diagram& d);

/// lambda'_i = #{j : lambda_j >= i}.
Partition conjugate(const Composition& lambda);

/// For nodes (i,j), (i',j') with i != i' and j != j', one of (i',j),
/// (i,j') is also a node. Equivalent to lambda_D'' = mu_D'.
bool is_special(const Diagram& d);

/// t^D: entries 1..n in row-major order.
DTableau row_fill(const Diagram& d);
/// t_D: entries 1..n down each column, columns left to right.
DTableau column_fill(const Diagram& d);

/// w_D, defined by t^D w_D = t_D.
Permutation w_of_diagram(const Diagram& d);

/// Entries weakly increase towards the south-east.
bool is_standard(const DTableau& t);

/// Replaces each entry i by iw.
DTableau act(const DTableau& t, const Permutation& w);

/// D(d, lambda): the row-form of d cut into lambda-blocks laid on
/// consecutive rows and shifted right as little as possible to become a
/// column filling. Throws unless d is a distinguished coset representative.
Diagram diagram_from_element(const Permutation& d, const Composition& lambda);

/// Lazily enumerates the standard tableaux of a diagram (at most 64
/// nodes). Each generator owns its state.
class StandardTableauGenerator {
 public:
  explicit StandardTableauGenerator(Diagram d);

  std::optional<DTableau> next();

 private:
  bool search(int start);

  Diagram diagram_;
  std::vector<std::uint64_t> before_mask_;  // other nodes weakly north-west
  std::vector<int> choice_;                 // node index holding each value
  std::uint64_t filled_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<DTableau> standard_tableaux(const Diagram& d);
/// The prefixes u of w_D, recovered as the u with t^D u standard.
std::vector<Permutation> prefixes_of_wD(const Diagram& d);

/// Completes a prefix u of w_D to w_D: a word k_1..k_m with
/// u s_{k_1} ... s_{k_m} = w_D, each step adding one to the length.
/// Throws unless t^D u is standard.
Word complete_prefix(const Permutation& u, const Diagram& d);

/// The subsequence type, computed as shape(w_{J(lambda_D)} w_D).
Partition subsequence_type(const Diagram& d);

/// Maximum number of nodes covered by k mutually disjoint paths, by
/// exhaustive search over node subsets (|D| <= 14) or min-cost flow. Independent of RSK.
int brute_force_kpath_max(const Diagram& d, int k);
/// Min-cost-flow route of brute_force_kpath_max, usable at any size.
int kpath_max_by_flow(const Diagram& d, int k);

/// Subsequence type equals lambda_D'.
bool is_admissible(const Diagram& d);

/// The diagram rotated through 180 degrees.
Diagram rotate180(const Diagram& d);

/// a lies weakly north-west of b: a.row <= b.row and a.col <= b.col.
bool weakly_north_west(Node a, Node b);

}  // namespace klrim
