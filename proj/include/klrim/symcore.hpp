#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

/// Permutations of S_n acting on the right, Coxeter length and reduced
/// words, the weak (prefix) order, Young-subgroup data and the
/// Robinson-Schensted correspondence.
///
/// Conventions: a permutation w is stored in row-form [1w, ..., nw] with
/// 1-based values, and products act left to right, i(wv) = (iw)v.
namespace klrim {

/// Raised when an enumeration would exceed the configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence of generator indices k, each standing for s_k = (k, k+1).
using Word = std::vector<int>;

class Permutation {
 public:
  /// Validates that `row_form` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> row_form);

  static Permutation identity(int n);
  /// w_0, i -> n+1-i.
  static Permutation longest(int n);
  /// The adjacent transposition s_k in S_n, 1 <= k < n.
  static Permutation generator(int n, int k);

  int size() const { return static_cast<int>(row_form_.size()); }
  /// Image i·w for 1 <= i <= n.
  int operator()(int i) const { return row_form_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& row_form() const { return row_form_; }
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> row_form_;
};

/// Ordered positive parts.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  int parts_count() const { return static_cast<int>(parts_.size()); }
  /// Sum of the parts.
  int total() const { return total_; }
  /// 1-based part access.
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& parts() const { return parts_; }

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// A composition whose parts are weakly decreasing.
class Partition : public Composition {
 public:
  explicit Partition(std::vector<int> parts);
};

bool is_partition(const Composition& lambda);
Composition reversed(const Composition& lambda);
/// lambda with a trailing part 1 appended.
Composition with_trailing_one(const Composition& lambda);
/// All compositions of n in lexicographic order of parts.
std::vector<Composition> compositions_of(int n);

/// Rows strictly increasing, columns strictly increasing, entries 1..n.
class StandardYoungTableau {
 public:
  explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;

  friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

struct RskPair {
  StandardYoungTableau insertion;  // P(w)
  StandardYoungTableau recording;  // Q(w)
};

int length(const Permutation& w);
/// Pairs (i, j), i < j, with iw > jw, in lexicographic order.
std::vector<std::pair<int, int>> inversion_set(const Permutation& w);

/// The product wv under the right action: i(wv) = (iw)v.
Permutation compose(const Permutation& w, const Permutation& v);
Permutation inverse(const Permutation& w);
/// Product s_{k_1} ... s_{k_m} in S_n.
Permutation evaluate_word(int n, std::span<const int> word);

/// Lexicographically smallest reduced word.
Word reduced_word(const Permutation& w);

/// x is a prefix of y: l(x) + l(x^{-1}y) = l(y).
bool is_prefix(const Permutation& x, const Permutation& y);

/// w_{J(lambda)}: the concatenation of the reversed lambda-blocks.
Permutation longest_parabolic_element(const Composition& lambda);

/// Minimal-length representative of its right W_{J(lambda)}-coset, i.e.
/// the row-form increases within each lambda-block of positions.
bool is_coset_rep(const Permutation& e, const Composition& lambda);

/// Row-insertion RSK of the row-form.
RskPair rsk(const Permutation& w);
Partition shape(const Permutation& w);
/// Right cells of S_n are the fibres of the recording tableau.
bool same_right_cell(const Permutation& w, const Permutation& v);

/// w_0 w w_0.
Permutation dot_conjugate(const Permutation& w);

/// nu ⊴ mu in the dominance order. Throws when the totals differ.
bool dominates(const Partition& nu, const Partition& mu);

/// Number of standard Young tableaux of the given shape (hook lengths).
std::uint64_t count_standard_young_tableaux(const Partition& shape);

}  // namespace klrim
