#include <doctest.h>

#include "support.hpp"

using namespace klrim;
using klrim::testing::comp;
using klrim::testing::diag;
using klrim::testing::perm;

namespace {

std::vector<Diagram> sorted(std::vector<Diagram> ds) {
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Three-row fixtures for the remaining orderings of (s,t,u).
Diagram long_top(int s, int t, const std::vector<int>& c) {
  std::vector<Node> nodes;
  for (int i = 1; i <= s; ++i) nodes.push_back({1, i});
  for (int i : c) nodes.push_back({2, i});
  for (int i = 1; i <= t; ++i) nodes.push_back({3, i});
  return Diagram(nodes);
}

Diagram short_top_long_middle(int s, int t, int u, const std::vector<int>& c) {
  std::vector<Node> nodes;
  for (int i : c) nodes.push_back({1, i});
  for (int i = 1; i <= s; ++i) nodes.push_back({2, i});
  for (int i = 1; i <= t - u; ++i) nodes.push_back({3, i});
  for (int i : c) nodes.push_back({3, i});
  return Diagram(nodes);
}

Diagram increasing_rows(int s, int t, int u) {
  std::vector<Node> nodes;
  for (int i = s - u + 1; i <= s; ++i) nodes.push_back({1, i});
  for (int i = s - t + 1; i <= s; ++i) nodes.push_back({2, i});
  for (int i = 1; i <= s; ++i) nodes.push_back({3, i});
  return Diagram(nodes);
}

std::vector<Composition> compositions_up_to(int max_n) {
  std::vector<Composition> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& c : compositions_of(n)) out.push_back(std::move(c));
  return out;
}

}  // namespace

TEST_CASE("membership in Z") {
  CHECK(in_Z(Permutation::identity(3), comp({2, 1})));
  CHECK(in_Z(Permutation::identity(4), comp({1, 3})));
  CHECK(in_Z(perm({1, 3, 2}), comp({2, 1})));
  CHECK_FALSE(in_Z(perm({3, 1, 2}), comp({2, 1})));
}

TEST_CASE("rim search examples") {
  const RimResult a = rim_search(comp({2, 1}));
  CHECK(a.rim == std::vector<Permutation>{perm({1, 3, 2})});
  CHECK(a.diagrams == std::vector<Diagram>{Diagram::young(comp({2, 1}))});
  CHECK(a.special == std::vector<bool>{true});
  const RimResult b = rim_search(comp({1, 2, 1}));
  CHECK(b.rim == std::vector<Permutation>{perm({1, 2, 4, 3}), perm({2, 1, 3, 4})});
  CHECK(rim_search(comp({1, 2})).rim == std::vector<Permutation>{perm({2, 1, 3})});
  CHECK_THROWS_AS(rim_search(comp({3, 3}), {5}), BoundExceeded);
}

TEST_CASE("rim search agrees with enumeration of the whole group") {
  for (const auto& lambda : compositions_up_to(6)) {
    const RimResult r = rim_search(lambda);
    CHECK(r.rim == klrim::testing::rim_by_enumeration(lambda));
  }
}

TEST_CASE("structure of Z and the rim") {
  for (const auto& lambda : compositions_up_to(7)) {
    const RimResult r = rim_search(lambda);
    const auto z = z_by_search(lambda);
    CHECK(z == z_from_rim(r));
    const std::set<Permutation> zs(z.begin(), z.end());
    const int n = lambda.total();
    for (const auto& e : z) {
      CHECK(in_Z(e, lambda));
      for (int k = 1; k < n; ++k) {
        const Permutation f = compose(e, Permutation::generator(n, k));
        if (length(f) < length(e)) CHECK(zs.count(f));
      }
      CHECK(is_admissible(diagram_from_element(e, lambda)));
    }
    for (std::size_t i = 0; i < r.rim.size(); ++i) {
      const auto& y = r.rim[i];
      for (int k = 1; k < n; ++k) {
        const Permutation f = compose(y, Permutation::generator(n, k));
        if (length(f) > length(y)) CHECK_FALSE(zs.count(f));
      }
      for (std::size_t j = 0; j < r.rim.size(); ++j)
        if (i != j) CHECK_FALSE(is_prefix(y, r.rim[j]));
      CHECK(r.diagrams[i] == diagram_from_element(y, lambda));
      CHECK(w_of_diagram(r.diagrams[i]) == y);
      CHECK(is_admissible(r.diagrams[i]));
      CHECK(r.special[i] == is_special(r.diagrams[i]));
    }
  }
}

TEST_CASE("admissible diagrams of a row composition give members of Z") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : compositions_of(n)) {
      const auto z = z_by_search(lambda);
      for (const auto& e : klrim::testing::all_permutations(n)) {
        if (!is_coset_rep(e, lambda)) continue;
        const bool member = std::binary_search(z.begin(), z.end(), e);
        CHECK(member == is_admissible(diagram_from_element(e, lambda)));
      }
    }
}

TEST_CASE("cells") {
  std::vector<std::pair<Permutation, Word>> seen;
  auto collect = [&](const Permutation& w, const Word& word) { seen.emplace_back(w, word); };
  for_each_cell_element(rim_search(comp({3})), collect);
  CHECK(seen == std::vector<std::pair<Permutation, Word>>{{Permutation::longest(3), Word{1, 2, 1}}});
  seen.clear();
  for_each_cell_element(rim_search(comp({2, 1})), collect);
  CHECK(seen == std::vector<std::pair<Permutation, Word>>{{perm({2, 1, 3}), Word{1}}, {perm({3, 1, 2}), Word{1, 2}}});
  for (const auto& lambda : compositions_up_to(6)) {
    const Permutation w_j = longest_parabolic_element(lambda);
    std::set<Permutation> cell;
    for_each_cell_element(rim_search(lambda), [&](const Permutation& w, const Word& word) {
      CHECK(evaluate_word(lambda.total(), word) == w);
      CHECK(static_cast<int>(word.size()) == length(w));
      cell.insert(w);
    });
    std::set<Permutation> expected;
    for (const auto& w : klrim::testing::all_permutations(lambda.total()))
      if (same_right_cell(w, w_j)) expected.insert(w);
    CHECK(cell == expected);
    CHECK(cell_size(lambda) == expected.size());
  }
}

TEST_CASE("extension by a trailing part 1") {
  CHECK(star_extend(Diagram::young(comp({2, 1}))) == Diagram::young(comp({2, 1, 1})));
  const Diagram p0 = column_pair_diagram(3, 0);
  CHECK(star_extend(p0) == diag({{1, 1}, {2, 1}, {2, 2}, {3, 1}, {4, 1}}));
  CHECK_THROWS(star_extend(diag({{1, 2}, {2, 1}})));
  CHECK(theta_star(rim_search(comp({2, 1}))).size() == 1);
  CHECK(theta_star(rim_search(comp({1, 2, 1}))).size() == 2);
  CHECK_THROWS(theta_star(rim_search(comp({1, 2}))));
  for (const auto& lambda : compositions_up_to(6)) {
    if (lambda.parts().back() != 1 || lambda.parts_count() < 2) continue;
    const RimResult r = rim_search(lambda);
    CHECK(theta_star(r) == rim_search(with_trailing_one(lambda)));
    // The new node sits under the node of the old last row.
    for (const auto& d : r.diagrams) {
      const Diagram x = star_extend(d);
      CHECK(x.nodes().back().col == d.nodes().back().col);
    }
  }
}

TEST_CASE("rotation duality") {
  for (const auto& lambda : compositions_up_to(7)) {
    const RimResult r = rim_search(lambda);
    std::vector<Permutation> rotated;
    for (const auto& y : r.rim) rotated.push_back(dot_conjugate(y));
    std::sort(rotated.begin(), rotated.end());
    CHECK(rim_search(reversed(lambda)).rim == rotated);
  }
}

TEST_CASE("leading pair diagrams") {
  CHECK(leading_pair_diagram(2, 3, 1, 3) == diag({{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
  CHECK(leading_pair_diagram(2, 3, 2, 3) == diag({{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}));
  const RimResult r = rim_search(comp({2, 3, 1}));
  CHECK(sorted(r.diagrams) == sorted({leading_pair_diagram(2, 3, 1, 3), leading_pair_diagram(2, 3, 2, 3)}));
  // Rows past the third come from repeated trailing-one extension.
  for (int t = 1; t <= 3; ++t)
    for (int s = t + 1; s <= 4; ++s) {
      RimResult current = rim_search(comp({t, s, 1}));
      for (int rows = 4; t + s + rows - 2 <= 9; ++rows) {
        current = theta_star(current);
        std::vector<Diagram> expected;
        for (int u = 1; u <= s - t + 1; ++u) expected.push_back(leading_pair_diagram(t, s, u, rows));
        CHECK(sorted(current.diagrams) == sorted(expected));
      }
    }
}

TEST_CASE("three-part families") {
  // The pictures for (8,3,5), (5,3,8), (3,8,5) and (3,5,8) with their C.
  CHECK(is_special(long_top(8, 5, {2, 3, 4})));
  const Diagram h = long_bottom_diagram(8, 5, {5, 6, 8});
  CHECK(h == diag({{1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5}, {2, 6}, {2, 8}, {3, 1}, {3, 2}, {3, 3}, {3, 4},
                   {3, 5}, {3, 6}, {3, 7}, {3, 8}}));
  CHECK(is_special(h));
  CHECK(is_special(short_top_long_middle(8, 5, 3, {3, 5, 7})));
  CHECK(is_special(increasing_rows(8, 5, 3)));
  for (int n = 3; n <= 10; ++n)
    for (const auto& lambda : compositions_of(n)) {
      if (lambda.parts_count() != 3) continue;
      std::vector<int> p = lambda.parts();
      std::sort(p.rbegin(), p.rend());
      const int s = p[0], t = p[1], u = p[2];
      const auto family = three_part_rim_diagrams(lambda);
      REQUIRE(family.has_value());
      CHECK(family->size() == three_part_table_count(lambda));
      for (const auto& d : *family) {
        CHECK(is_special(d));
        CHECK(row_composition(d) == lambda);
      }
      std::vector<Diagram> fixture;
      if (lambda == comp({s, u, t}))
        for (const auto& c : subsets_of_range(1, t, u)) fixture.push_back(long_top(s, t, c));
      else if (lambda == comp({u, s, t}))
        for (const auto& c : subsets_of_range(t - u + 1, s, u)) fixture.push_back(short_top_long_middle(s, t, u, c));
      else if (lambda == comp({u, t, s}))
        fixture.push_back(increasing_rows(s, t, u));
      else
        continue;
      CHECK(sorted(*family) == sorted(fixture));
    }
}

TEST_CASE("column pair diagrams") {
  CHECK(column_pair_diagram(3, 0) == diag({{1, 1}, {2, 1}, {2, 2}, {3, 1}}));
  CHECK(column_pair_diagram(3, 1) == diag({{1, 2}, {2, 1}, {2, 2}, {3, 2}}));
  CHECK_THROWS(column_pair_diagram(3, 2));
  CHECK(column_pair_row_forms(3) == std::vector<Permutation>{perm({1, 2, 4, 3}), perm({2, 1, 3, 4})});
  for (int r = 3; r <= 7; ++r) {
    const auto g = column_pair_row_forms(r);
    for (int v = 0; v <= r - 2; ++v) {
      const Diagram d = column_pair_diagram(r, v);
      CHECK(w_of_diagram(d) == g[static_cast<std::size_t>(v)]);
      CHECK(is_special(d) == (v == 0 || v == r - 2));
    }
    // The first element starts 1, 2, r+1, 3, ...
    CHECK(g.front()(1) == 1);
    CHECK(g.front()(2) == 2);
    CHECK(g.front()(3) == r + 1);
  }
  CHECK(padded_column_pair_diagram(1, 3, 1, 1) == column_pair_diagram(3, 1));
  CHECK(padded_column_pair_diagram(2, 3, 1, 0) == diag({{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 1}}));
  CHECK(padded_column_pair_diagram(1, 3, 2, 1) == diag({{1, 2}, {2, 1}, {2, 2}, {3, 2}, {4, 2}}));
  // Padding agrees with trailing-one extension and rotation.
  for (int rows = 3; rows <= 5; ++rows)
    for (int below = 1; below <= 3; ++below) {
      std::vector<int> parts(static_cast<std::size_t>(rows), 2);
      parts.front() = 1;
      parts.back() = 1;
      RimResult r = rim_from_diagrams(comp(parts), *column_pair_rim_diagrams(comp(parts)));
      for (int b = 1; b < below; ++b) r = theta_star(r);
      parts.insert(parts.end(), static_cast<std::size_t>(below - 1), 1);
      CHECK(r == rim_from_diagrams(comp(parts), *column_pair_rim_diagrams(comp(parts))));
    }
}

TEST_CASE("closed forms agree with search") {
  int covered = 0;
  for (const auto& lambda : compositions_up_to(8)) {
    const auto candidates = closed_form_candidates(lambda);
    for (const auto& c : candidates) CHECK(c == candidates.front());
    const auto closed = rim_closed_form(lambda);
    CHECK(closed.has_value() == !candidates.empty());
    if (!closed) continue;
    ++covered;
    CHECK(*closed == rim_search(lambda));
  }
  CHECK(covered > 100);
  CHECK_FALSE(rim_closed_form(comp({1, 3, 1, 2})).has_value());
  const auto example = rim_closed_form(comp({1, 2, 2, 1}));
  REQUIRE(example.has_value());
  CHECK(example->rim == column_pair_row_forms(4));
  CHECK(example->special_count() == 2);
}

TEST_CASE("search bound") {
  CHECK(kDefaultSearchBound == 10);
  CHECK(SearchOptions{}.max_n == default_search_bound());
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(subsets_of_range(1, 3, 2) == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
}
