#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "klrim/diagrams.hpp"
#include "klrim/paths.hpp"

/// The right cell C(lambda) containing w_{J(lambda)}, its rim Y(lambda)
/// (the prefix-maximal elements of Z(lambda)), and closed forms of the rim
/// for several composition families.
namespace klrim {

/// Default n bound for exhaustive searches; KLRIM_MAX_N overrides it.
inline constexpr int kDefaultSearchBound = 10;
int default_search_bound();

struct SearchOptions {
  int max_n = default_search_bound();
};

/// Rim elements with their canonical diagrams D(y, lambda). The three
/// vectors are parallel and sorted by row-form.
struct RimResult {
  Composition composition;
  std::vector<Permutation> rim;
  std::vector<Diagram> diagrams;
  std::vector<bool> special;

  int size() const { return static_cast<int>(rim.size()); }
  int special_count() const;

  friend bool operator==(const RimResult&, const RimResult&) = default;
};

/// Builds a RimResult from rim diagrams, sorting by w_D.
RimResult rim_from_diagrams(const Composition& lambda, std::vector<Diagram> diagrams);

/// Membership in Z(lambda) with w_J and Q(w_J) computed once.
class ZMembership {
 public:
  explicit ZMembership(const Composition& lambda);

  bool operator()(const Permutation& e) const;
  const Permutation& longest_parabolic() const { return w_j_; }

 private:
  Composition lambda_;
  Permutation w_j_;
  StandardYoungTableau q_;
};

/// e is a distinguished coset representative and w_J e ~_R w_J.
bool in_Z(const Permutation& e, const Composition& lambda);

/// Breadth-first search of Z(lambda) upward from the identity; the rim is
/// the set of elements with no length-increasing extension inside Z.
/// Throws BoundExceeded when n > options.max_n.
RimResult rim_search(const Composition& lambda, const SearchOptions& options = {});

/// Z(lambda) by the same search, sorted by row-form.
std::vector<Permutation> z_by_search(const Composition& lambda, const SearchOptions& options = {});
/// Z(lambda) as the union of the prefix sets of the rim, sorted.
std::vector<Permutation> z_from_rim(const RimResult& rim);

/// Visits w_J e for every e in Z(lambda) (sorted by e) together with the
/// reduced word reduced_word(w_J) ++ reduced_word(e).
void for_each_cell_element(const RimResult& rim,
                           const std::function<void(const Permutation&, const Word&)>& visit);
/// |C(lambda)|, by the hook length formula on shape(w_J).
std::uint64_t cell_size(const Composition& lambda);

/// Raised when no column of D admits an admissible one-node extension.
class NoAdmissibleExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// D with one new bottom row holding a single node in the least column
/// that keeps the diagram admissible. Requires an admissible D.
Diagram star_extend(const Diagram& d);

/// Applies star_extend to every rim diagram, giving the rim of lambda
/// with a part 1 appended. Requires the last part of lambda to be 1.
RimResult theta_star(const RimResult& rim);

// Explicit rim diagrams.

/// First row: node in column u and columns s-t+2..s; second row full
/// (s nodes); rows 3..r: one node in column u. Composition (t,s,1^{r-2}).
Diagram leading_pair_diagram(int t, int s, int u, int rows);
/// Three rows (t,s,u), s >= t >= u: top row on C plus columns
/// s-t+u+1..s, middle row full, bottom row on C, C ⊆ {1..s-t+u}.
Diagram long_middle_diagram(int s, int t, const std::vector<int>& columns);
/// Three rows (t,u,s): top row on columns s-t+1..s, middle row on C,
/// bottom row full, C ⊆ {s-t+1..s}.
Diagram long_bottom_diagram(int s, int t, const std::vector<int>& columns);
/// Two-column diagrams of (1,2^{r-2},1), 0 <= v <= r-2.
Diagram column_pair_diagram(int rows, int v);
/// column_pair_diagram with its full-height column extended by
/// `above - 1` nodes upward and `below - 1` nodes downward, giving the
/// composition (1^above, 2^{rows-2}, 1^below).
Diagram padded_column_pair_diagram(int above, int rows, int below, int v);

/// Rim diagrams of the individual families, or nothing if lambda is not
/// of that shape.
std::optional<std::vector<Diagram>> three_part_rim_diagrams(const Composition& lambda);
/// (t,s,1^k) with k >= 1, or its reverse.
std::optional<std::vector<Diagram>> leading_pair_rim_diagrams(const Composition& lambda);
/// (1^a,2^k,1^b) with a, k, b >= 1.
std::optional<std::vector<Diagram>> column_pair_rim_diagrams(const Composition& lambda);

/// Every recognised family matching lambda, in dispatch order: partition,
/// reverse partition, three parts, (t,s,1^k) and its reverse,
/// (1^a,2^k,1^b).
std::vector<RimResult> closed_form_candidates(const Composition& lambda);
/// The first matching family, or nothing.
std::optional<RimResult> rim_closed_form(const Composition& lambda);

/// All u-subsets of {first..last}, each sorted, in lexicographic order.
std::vector<std::vector<int>> subsets_of_range(int first, int last, int size);
std::uint64_t binomial(int n, int k);

}  // namespace klrim
