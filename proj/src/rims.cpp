#include "klrim/rims.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>
#include <string_view>

namespace klrim {

int default_search_bound() {
  if (const char* env = std::getenv("KLRIM_MAX_N")) {
    const std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultSearchBound;
}

int RimResult::special_count() const {
  return static_cast<int>(std::count(special.begin(), special.end(), true));
}

RimResult rim_from_diagrams(const Composition& lambda, std::vector<Diagram> diagrams) {
  std::vector<std::pair<Permutation, Diagram>> items;
  for (auto& d : diagrams) {
    if (d.size() != lambda.total()) throw std::invalid_argument("rim diagram has the wrong size");
    items.emplace_back(w_of_diagram(d), std::move(d));
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  RimResult result{lambda, {}, {}, {}};
  for (auto& [w, d] : items) {
    result.rim.push_back(w);
    result.special.push_back(is_special(d));
    result.diagrams.push_back(std::move(d));
  }
  return result;
}

ZMembership::ZMembership(const Composition& lambda)
    : lambda_(lambda), w_j_(longest_parabolic_element(lambda)), q_(rsk(w_j_).recording) {}

bool ZMembership::operator()(const Permutation& e) const {
  return is_coset_rep(e, lambda_) && rsk(compose(w_j_, e)).recording == q_;
}

bool in_Z(const Permutation& e, const Composition& lambda) { return ZMembership(lambda)(e); }

namespace {

struct SearchOutcome {
  std::vector<Permutation> z;
  std::vector<Permutation> rim;
};

SearchOutcome search_z(const Composition& lambda, const SearchOptions& options) {
  const int n = lambda.total();
  if (n > options.max_n)
    throw BoundExceeded("composition of " + std::to_string(n) + " exceeds the search bound " +
                        std::to_string(options.max_n));
  const ZMembership member(lambda);
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> level{Permutation::identity(n)};
  SearchOutcome out;
  while (!level.empty()) {
    std::set<Permutation> next;
    for (const auto& e : level) {
      // e s_k swaps the values k and k+1; the length grows iff k comes first.
      std::vector<int> position(static_cast<std::size_t>(n) + 1);
      for (int i = 1; i <= n; ++i) position[static_cast<std::size_t>(e(i))] = i;
      bool extended = false;
      for (int k = 1; k < n; ++k) {
        if (position[static_cast<std::size_t>(k)] > position[static_cast<std::size_t>(k + 1)]) continue;
        auto row = e.row_form();
        std::swap(row[static_cast<std::size_t>(position[static_cast<std::size_t>(k)] - 1)],
                  row[static_cast<std::size_t>(position[static_cast<std::size_t>(k + 1)] - 1)]);
        Permutation f(std::move(row));
        if (!member(f)) continue;
        extended = true;
        if (seen.insert(f).second) next.insert(std::move(f));
      }
      if (!extended) out.rim.push_back(e);
    }
    level.assign(next.begin(), next.end());
  }
  out.z.assign(seen.begin(), seen.end());
  std::sort(out.rim.begin(), out.rim.end());
  return out;
}

}  // namespace

RimResult rim_search(const Composition& lambda, const SearchOptions& options) {
  auto outcome = search_z(lambda, options);
  RimResult result{lambda, {}, {}, {}};
  for (auto& y : outcome.rim) {
    Diagram d = diagram_from_element(y, lambda);
    result.special.push_back(is_special(d));
    result.diagrams.push_back(std::move(d));
    result.rim.push_back(std::move(y));
  }
  return result;
}

std::vector<Permutation> z_by_search(const Composition& lambda, const SearchOptions& options) {
  return search_z(lambda, options).z;
}

std::vector<Permutation> z_from_rim(const RimResult& rim) {
  std::set<Permutation> z;
  for (const auto& d : rim.diagrams)
    for (auto& u : prefixes_of_wD(d)) z.insert(std::move(u));
  return {z.begin(), z.end()};
}

void for_each_cell_element(const RimResult& rim,
                           const std::function<void(const Permutation&, const Word&)>& visit) {
  const Permutation w_j = longest_parabolic_element(rim.composition);
  const Word head = reduced_word(w_j);
  for (const auto& e : z_from_rim(rim)) {
    Word word = head;
    const Word tail = reduced_word(e);
    word.insert(word.end(), tail.begin(), tail.end());
    visit(compose(w_j, e), word);
  }
}

std::uint64_t cell_size(const Composition& lambda) {
  return count_standard_young_tableaux(shape(longest_parabolic_element(lambda)));
}

Diagram star_extend(const Diagram& d) {
  if (!is_admissible(d)) throw std::invalid_argument("star_extend: diagram is not admissible");
  const int new_row = d.row_count() + 1;
  for (int col = 1; col <= d.column_count(); ++col) {
    auto nodes = d.nodes();
    nodes.push_back({new_row, col});
    Diagram candidate(std::move(nodes));
    if (is_admissible(candidate)) return candidate;
  }
  throw NoAdmissibleExtension("star_extend: no column of the diagram gives an admissible extension");
}

RimResult theta_star(const RimResult& rim) {
  const auto& parts = rim.composition.parts();
  if (parts.back() != 1) throw std::invalid_argument("theta_star: the last part must be 1");
  std::vector<Diagram> extended;
  for (const auto& d : rim.diagrams) extended.push_back(star_extend(d));
  return rim_from_diagrams(with_trailing_one(rim.composition), std::move(extended));
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

std::vector<std::vector<int>> subsets_of_range(int first, int last, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> grow = [&](int next) {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= last; ++v) {
      current.push_back(v);
      grow(v + 1);
      current.pop_back();
    }
  };
  if (size >= 0) grow(first);
  return out;
}

Diagram leading_pair_diagram(int t, int s, int u, int rows) {
  std::vector<Node> nodes{{1, u}};
  for (int i = s - t + 2; i <= s; ++i) nodes.push_back({1, i});
  for (int i = 1; i <= s; ++i) nodes.push_back({2, i});
  for (int i = 3; i <= rows; ++i) nodes.push_back({i, u});
  return Diagram(std::move(nodes));
}

Diagram long_middle_diagram(int s, int t, const std::vector<int>& columns) {
  const int u = static_cast<int>(columns.size());
  std::vector<Node> nodes;
  for (int c : columns) nodes.push_back({1, c});
  for (int i = s - t + u + 1; i <= s; ++i) nodes.push_back({1, i});
  for (int i = 1; i <= s; ++i) nodes.push_back({2, i});
  for (int c : columns) nodes.push_back({3, c});
  return Diagram(std::move(nodes));
}

Diagram long_bottom_diagram(int s, int t, const std::vector<int>& columns) {
  std::vector<Node> nodes;
  for (int i = s - t + 1; i <= s; ++i) nodes.push_back({1, i});
  for (int c : columns) nodes.push_back({2, c});
  for (int i = 1; i <= s; ++i) nodes.push_back({3, i});
  return Diagram(std::move(nodes));
}

Diagram column_pair_diagram(int rows, int v) {
  if (rows < 3 || v < 0 || v > rows - 2) throw std::invalid_argument("column_pair_diagram: need rows >= 3, 0 <= v <= rows-2");
  std::vector<Node> nodes;
  if (v == 0) {
    for (int i = 1; i <= rows; ++i) nodes.push_back({i, 1});
    for (int i = 2; i <= rows - 1; ++i) nodes.push_back({i, 2});
  } else if (v == rows - 2) {
    for (int i = 2; i <= rows - 1; ++i) nodes.push_back({i, 1});
    for (int i = 1; i <= rows; ++i) nodes.push_back({i, 2});
  } else {
    for (int i = 2; i <= v + 1; ++i) nodes.push_back({i, 1});
    for (int i = 1; i <= rows; ++i) nodes.push_back({i, 2});
    for (int i = v + 2; i <= rows - 1; ++i) nodes.push_back({i, 3});
  }
  return Diagram(std::move(nodes));
}

Diagram padded_column_pair_diagram(int above, int rows, int below, int v) {
  if (above < 1 || below < 1) throw std::invalid_argument("padded_column_pair_diagram: padding must be >= 1");
  const Diagram core = column_pair_diagram(rows, v);
  const int long_column = v == 0 ? 1 : 2;
  const int shift = above - 1;
  std::vector<Node> nodes;
  for (int i = 1; i <= shift; ++i) nodes.push_back({i, long_column});
  for (const auto& n : core.nodes()) nodes.push_back({n.row + shift, n.col});
  for (int i = 1; i < below; ++i) nodes.push_back({rows + shift + i, long_column});
  return Diagram(std::move(nodes));
}

namespace {

std::vector<Diagram> rotated(std::vector<Diagram> diagrams) {
  for (auto& d : diagrams) d = rotate180(d);
  return diagrams;
}

std::optional<std::vector<Diagram>> partition_family(const Composition& lambda) {
  if (!is_partition(lambda)) return std::nullopt;
  return std::vector<Diagram>{Diagram::young(lambda)};
}

std::optional<std::vector<Diagram>> reverse_partition_family(const Composition& lambda) {
  const Composition rev = reversed(lambda);
  if (!is_partition(rev)) return std::nullopt;
  return rotated({Diagram::young(rev)});
}

}  // namespace

std::optional<std::vector<Diagram>> three_part_rim_diagrams(const Composition& lambda) {
  if (lambda.parts_count() != 3) return std::nullopt;
  std::vector<int> sorted = lambda.parts();
  std::sort(sorted.rbegin(), sorted.rend());
  const int s = sorted[0];
  const int t = sorted[1];
  const int u = sorted[2];
  const auto& p = lambda.parts();
  auto is = [&](int a, int b, int c) { return p[0] == a && p[1] == b && p[2] == c; };
  auto middle = [&] {
    std::vector<Diagram> out;
    for (const auto& c : subsets_of_range(1, s - t + u, u)) out.push_back(long_middle_diagram(s, t, c));
    return out;
  };
  auto bottom = [&] {
    std::vector<Diagram> out;
    for (const auto& c : subsets_of_range(s - t + 1, s, u)) out.push_back(long_bottom_diagram(s, t, c));
    return out;
  };
  if (is(s, t, u)) return std::vector<Diagram>{Diagram::young(lambda)};
  if (is(t, s, u)) return middle();
  if (is(t, u, s)) return bottom();
  if (is(u, t, s)) return rotated({Diagram::young(Composition({s, t, u}))});
  if (is(u, s, t)) return rotated(middle());
  if (is(s, u, t)) return rotated(bottom());
  return std::nullopt;
}

namespace {

std::optional<std::vector<Diagram>> leading_pair_forward(const Composition& lambda) {
  const int r = lambda.parts_count();
  if (r < 3) return std::nullopt;
  for (int i = 3; i <= r; ++i)
    if (lambda[i] != 1) return std::nullopt;
  if (lambda[1] >= lambda[2]) return std::vector<Diagram>{Diagram::young(lambda)};
  const int t = lambda[1];
  const int s = lambda[2];
  std::vector<Diagram> out;
  for (int u = 1; u <= s - t + 1; ++u) out.push_back(leading_pair_diagram(t, s, u, r));
  return out;
}

}  // namespace

std::optional<std::vector<Diagram>> leading_pair_rim_diagrams(const Composition& lambda) {
  if (auto forward = leading_pair_forward(lambda)) return forward;
  if (auto backward = leading_pair_forward(reversed(lambda))) return rotated(std::move(*backward));
  return std::nullopt;
}

std::optional<std::vector<Diagram>> column_pair_rim_diagrams(const Composition& lambda) {
  const auto& p = lambda.parts();
  std::size_t i = 0;
  int above = 0;
  while (i < p.size() && p[i] == 1) ++above, ++i;
  int twos = 0;
  while (i < p.size() && p[i] == 2) ++twos, ++i;
  int below = 0;
  while (i < p.size() && p[i] == 1) ++below, ++i;
  if (i != p.size() || above < 1 || twos < 1 || below < 1) return std::nullopt;
  const int rows = twos + 2;
  std::vector<Diagram> out;
  for (int v = 0; v <= rows - 2; ++v) out.push_back(padded_column_pair_diagram(above, rows, below, v));
  return out;
}

std::vector<RimResult> closed_form_candidates(const Composition& lambda) {
  using Family = std::optional<std::vector<Diagram>> (*)(const Composition&);
  constexpr Family families[] = {partition_family, reverse_partition_family, three_part_rim_diagrams,
                                 leading_pair_rim_diagrams, column_pair_rim_diagrams};
  std::vector<RimResult> out;
  for (Family family : families)
    if (auto diagrams = family(lambda)) out.push_back(rim_from_diagrams(lambda, std::move(*diagrams)));
  return out;
}

std::optional<RimResult> rim_closed_form(const Composition& lambda) {
  auto candidates = closed_form_candidates(lambda);
  if (candidates.empty()) return std::nullopt;
  for (const auto& other : candidates) {
    (void)other;
    assert(other == candidates.front() && "overlapping closed-form families disagree");
  }
  return std::move(candidates.front());
}

}  // namespace klrim
