#pragma once

// Test helpers and oracles that avoid the library routines they check.

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "klrim/paths.hpp"
#include "klrim/rims.hpp"
#include "klrim/verify.hpp"

namespace klrim::testing {

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> row(static_cast<std::size_t>(n));
  std::iota(row.begin(), row.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(row);
  while (std::next_permutation(row.begin(), row.end()));
  return out;
}

inline Permutation perm(std::vector<int> row) { return Permutation(std::move(row)); }
inline Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }
inline Diagram diag(std::vector<Node> nodes) { return Diagram(std::move(nodes)); }

// Length as the distance from the identity in the Cayley graph.
inline int length_by_bfs(const Permutation& w) {
  const int n = w.size();
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> level{Permutation::identity(n)};
  for (int d = 0;; ++d) {
    if (std::find(level.begin(), level.end(), w) != level.end()) return d;
    std::vector<Permutation> next;
    for (const auto& p : level)
      for (int k = 1; k < n; ++k) {
        auto row = p.row_form();
        std::swap(row[static_cast<std::size_t>(k - 1)], row[static_cast<std::size_t>(k)]);
        Permutation q(std::move(row));
        if (seen.insert(q).second) next.push_back(q);
      }
    level = std::move(next);
  }
}

// All reduced words of w, by stripping right descents recursively. Under
// i(wv) = (iw)v, w s_k swaps the values k and k+1, so k is a right
// descent when k+1 appears before k in the row-form.
inline std::vector<Word> all_reduced_words(const Permutation& w) {
  const int n = w.size();
  if (w.is_identity()) return {Word{}};
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
  std::vector<Word> out;
  for (int k = 1; k < n; ++k) {
    if (pos[static_cast<std::size_t>(k + 1)] > pos[static_cast<std::size_t>(k)]) continue;
    auto row = w.row_form();
    std::swap(row[static_cast<std::size_t>(pos[static_cast<std::size_t>(k)] - 1)],
              row[static_cast<std::size_t>(pos[static_cast<std::size_t>(k + 1)] - 1)]);
    for (auto word : all_reduced_words(Permutation(std::move(row)))) {
      word.push_back(k);
      out.push_back(std::move(word));
    }
  }
  return out;
}

// Prefixes of y: the products of initial segments of its reduced words.
inline std::set<Permutation> prefixes_by_words(const Permutation& y) {
  std::set<Permutation> out;
  for (const auto& word : all_reduced_words(y))
    for (std::size_t m = 0; m <= word.size(); ++m)
      out.insert(evaluate_word(y.size(), std::span<const int>(word.data(), m)));
  return out;
}

inline int longest_decreasing(const std::vector<int>& seq) {
  std::vector<int> best(seq.size(), 1);
  int top = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (seq[j] > seq[i]) best[i] = std::max(best[i], best[j] + 1);
    top = std::max(top, best[i]);
  }
  return top;
}

// Greene: the sum of the first k parts of shape(w) is the largest union of
// k increasing subsequences, i.e. the largest subsequence with no
// decreasing run longer than k.
inline std::vector<int> shape_by_greene(const Permutation& w) {
  const int n = w.size();
  std::vector<int> best(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> seq;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) seq.push_back(w(i + 1));
    const int dec = longest_decreasing(seq);
    for (int k = std::max(dec, 1); k <= n; ++k)
      best[static_cast<std::size_t>(k)] = std::max(best[static_cast<std::size_t>(k)], static_cast<int>(seq.size()));
  }
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k) {
    const int part = best[static_cast<std::size_t>(k)] - best[static_cast<std::size_t>(k - 1)];
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// A random principal diagram: random cells of a rows x cols grid with the
// empty rows and columns squeezed out.
inline Diagram random_diagram(std::mt19937& rng, int rows, int cols, int max_nodes) {
  std::vector<Node> cells;
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) cells.push_back({r, c});
  std::shuffle(cells.begin(), cells.end(), rng);
  std::uniform_int_distribution<int> size(1, std::min<int>(max_nodes, static_cast<int>(cells.size())));
  cells.resize(static_cast<std::size_t>(size(rng)));
  std::set<int> used_rows, used_cols;
  for (const auto& n : cells) {
    used_rows.insert(n.row);
    used_cols.insert(n.col);
  }
  auto rank = [](const std::set<int>& s, int v) { return static_cast<int>(std::distance(s.begin(), s.find(v))) + 1; };
  for (auto& n : cells) n = {rank(used_rows, n.row), rank(used_cols, n.col)};
  return Diagram(std::move(cells));
}

// A random k-path in d: nodes are dealt to paths in a random order, each
// joining a random constituent it can extend at the bottom.
inline KPath random_kpath(std::mt19937& rng, const Diagram& d) {
  std::vector<Node> nodes = d.nodes();
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::uniform_int_distribution<std::size_t> keep(1, nodes.size());
  nodes.resize(keep(rng));
  std::sort(nodes.begin(), nodes.end());
  std::vector<Path> paths;
  for (const auto& n : nodes) {
    std::vector<std::size_t> fits;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].back().row < n.row && paths[i].back().col <= n.col) fits.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, fits.size());
    const std::size_t choice = pick(rng);
    if (choice == fits.size())
      paths.push_back({n});
    else
      paths[fits[choice]].push_back(n);
  }
  std::shuffle(paths.begin(), paths.end(), rng);
  return KPath(std::move(paths), d);
}

// Every principal diagram inside a rows x cols grid with at most
// max_nodes nodes.
inline std::vector<Diagram> principal_diagrams_in_grid(int rows, int cols, int max_nodes) {
  std::vector<Diagram> out;
  const int cells = rows * cols;
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    if (std::popcount(mask) > max_nodes) continue;
    std::vector<Node> nodes;
    std::uint32_t row_mask = 0, col_mask = 0;
    for (int i = 0; i < cells; ++i)
      if (mask >> i & 1u) {
        nodes.push_back({i / cols + 1, i % cols + 1});
        row_mask |= 1u << (i / cols);
        col_mask |= 1u << (i % cols);
      }
    // Principal: the used rows and columns form initial segments.
    if ((row_mask & (row_mask + 1)) != 0 || (col_mask & (col_mask + 1)) != 0) continue;
    out.emplace_back(std::move(nodes));
  }
  return out;
}

// The rim by brute force over all of S_n: coset representatives whose
// w_J-translate shares a recording tableau with w_J, then the elements
// that are a prefix of no other member.
inline std::vector<Permutation> rim_by_enumeration(const Composition& lambda) {
  const Permutation w_j = longest_parabolic_element(lambda);
  const auto q = rsk(w_j).recording;
  std::vector<Permutation> z;
  for (const auto& e : all_permutations(lambda.total()))
    if (is_coset_rep(e, lambda) && rsk(compose(w_j, e)).recording == q) z.push_back(e);
  std::vector<Permutation> rim;
  for (const auto& y : z) {
    bool maximal = true;
    for (const auto& other : z)
      if (other != y && is_prefix(y, other)) {
        maximal = false;
        break;
      }
    if (maximal) rim.push_back(y);
  }
  return rim;
}

}  // namespace klrim::testing
