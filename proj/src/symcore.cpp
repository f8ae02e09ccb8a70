#include "klrim/symcore.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace klrim {

Permutation::Permutation(std::vector<int> row_form) : row_form_(std::move(row_form)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : row_form_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("row-form is not a bijection of {1..n}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> r(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(r.begin(), r.end(), 1);
  return Permutation(std::move(r));
}

Permutation Permutation::longest(int n) {
  std::vector<int> r(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(r));
}

Permutation Permutation::generator(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("generator index out of range");
  auto r = identity(n).row_form_;
  std::swap(r[static_cast<std::size_t>(k - 1)], r[static_cast<std::size_t>(k)]);
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (row_form_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += p;
  }
}

Partition::Partition(std::vector<int> parts) : Composition(std::move(parts)) {
  if (!is_partition(*this)) throw std::invalid_argument("partition parts must be weakly decreasing");
}

bool is_partition(const Composition& lambda) {
  return std::is_sorted(lambda.parts().rbegin(), lambda.parts().rend());
}

Composition reversed(const Composition& lambda) {
  return Composition(std::vector<int>(lambda.parts().rbegin(), lambda.parts().rend()));
}

Composition with_trailing_one(const Composition& lambda) {
  auto parts = lambda.parts();
  parts.push_back(1);
  return Composition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  // Each subset of the n-1 gaps is a set of cut points.
  const std::uint32_t gaps = static_cast<std::uint32_t>(n - 1);
  std::vector<std::vector<int>> all;
  for (std::uint32_t mask = 0; mask < (1u << gaps); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (std::uint32_t g = 0; g < gaps; ++g) {
      if (mask & (1u << g)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    all.push_back(std::move(parts));
  }
  std::sort(all.begin(), all.end());
  for (auto& p : all) out.emplace_back(std::move(p));
  return out;
}

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& row = rows_[i];
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (i > 0 && row.size() > rows_[i - 1].size())
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0 && row[j] <= row[j - 1]) throw std::invalid_argument("tableau rows must increase");
      if (i > 0 && row[j] <= rows_[i - 1][j])
        throw std::invalid_argument("tableau columns must increase");
    }
    n += row.size();
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau entries must be a bijection onto {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
}

Partition StandardYoungTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int length(const Permutation& w) {
  int count = 0;
  const auto& r = w.row_form();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r[i] > r[j]) ++count;
  return count;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) out.emplace_back(i, j);
  return out;
}

Permutation compose(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("compose: permutations of different degree");
  std::vector<int> r(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) r[static_cast<std::size_t>(i - 1)] = v(w(i));
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> r(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i) r[static_cast<std::size_t>(w(i) - 1)] = i;
  return Permutation(std::move(r));
}

Permutation evaluate_word(int n, std::span<const int> word) {
  // Right-multiplying by s_k swaps the values k and k+1 in the row-form.
  auto r = Permutation::identity(n).row_form();
  for (int k : word) {
    if (k < 1 || k >= n) throw std::invalid_argument("word letter out of range");
    for (int& v : r) {
      if (v == k) v = k + 1;
      else if (v == k + 1) v = k;
    }
  }
  return Permutation(std::move(r));
}

Word reduced_word(const Permutation& w) {
  // s_k is a left descent iff positions k, k+1 of the row-form are inverted;
  // stripping it swaps those positions.
  Word word;
  auto r = w.row_form();
  const std::size_t n = r.size();
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < n && r[k] < r[k + 1]) ++k;
    if (k + 1 >= n) break;
    word.push_back(static_cast<int>(k) + 1);
    std::swap(r[k], r[k + 1]);
  }
  return word;
}

bool is_prefix(const Permutation& x, const Permutation& y) {
  return length(x) + length(compose(inverse(x), y)) == length(y);
}

Permutation longest_parabolic_element(const Composition& lambda) {
  std::vector<int> r;
  r.reserve(static_cast<std::size_t>(lambda.total()));
  int offset = 0;
  for (int part : lambda.parts()) {
    for (int v = offset + part; v > offset; --v) r.push_back(v);
    offset += part;
  }
  return Permutation(std::move(r));
}

bool is_coset_rep(const Permutation& e, const Composition& lambda) {
  if (e.size() != lambda.total()) throw std::invalid_argument("is_coset_rep: composition does not sum to n");
  int pos = 1;
  for (int part : lambda.parts()) {
    for (int j = 1; j < part; ++j)
      if (e(pos + j - 1) > e(pos + j)) return false;
    pos += part;
  }
  return true;
}

RskPair rsk(const Permutation& w) {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (int step = 1; step <= w.size(); ++step) {
    int x = w(step);
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({step});
        break;
      }
      auto& current = p[row];
      auto it = std::upper_bound(current.begin(), current.end(), x);
      if (it == current.end()) {
        current.push_back(x);
        q[row].push_back(step);
        break;
      }
      std::swap(x, *it);
    }
  }
  return RskPair{StandardYoungTableau(std::move(p)), StandardYoungTableau(std::move(q))};
}

Partition shape(const Permutation& w) { return rsk(w).insertion.shape(); }

bool same_right_cell(const Permutation& w, const Permutation& v) {
  if (w.size() != v.size()) throw std::invalid_argument("same_right_cell: permutations of different degree");
  return rsk(w).recording == rsk(v).recording;
}

Permutation dot_conjugate(const Permutation& w) {
  const int n = w.size();
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = n + 1 - w(n + 1 - i);
  return Permutation(std::move(r));
}

bool dominates(const Partition& nu, const Partition& mu) {
  if (nu.total() != mu.total()) throw std::invalid_argument("dominates: partitions of different totals");
  const int parts = std::max(nu.parts_count(), mu.parts_count());
  int sum_nu = 0;
  int sum_mu = 0;
  for (int i = 1; i <= parts; ++i) {
    if (i <= nu.parts_count()) sum_nu += nu[i];
    if (i <= mu.parts_count()) sum_mu += mu[i];
    if (sum_nu > sum_mu) return false;
  }
  return true;
}

std::uint64_t count_standard_young_tableaux(const Partition& shape) {
  // n! / prod(hooks), accumulated with exact cancellation.
  const int rows = shape.parts_count();
  std::vector<std::uint64_t> hooks;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= shape[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k <= rows && shape[k] >= j; ++k) ++below;
      hooks.push_back(static_cast<std::uint64_t>(shape[i] - j + below + 1));
    }
  std::uint64_t result = 1;
  std::vector<std::uint64_t> pending = hooks;
  for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(shape.total()); ++m) {
    std::uint64_t factor = m;
    for (auto& h : pending) {
      const std::uint64_t g = std::gcd(factor, h);
      factor /= g;
      h /= g;
    }
    result *= factor;
  }
  for (auto h : pending) {
    if (result % h != 0) throw std::logic_error("hook length division not exact");
    result /= h;
  }
  return result;
}

}  // namespace klrim
