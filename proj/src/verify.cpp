#include "klrim/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace klrim {

namespace {

struct ClaimInfo {
  Claim claim;
  std::string_view token;
  std::string_view scope;
};

constexpr std::array<ClaimInfo, 6> kClaims{{
    {Claim::single_element_rim, "T2.16a", "single-element rims"},
    {Claim::leading_pair, "T3.5a", "compositions (t,s,1^k)"},
    {Claim::three_parts, "T3.7a", "all 3-part compositions"},
    {Claim::column_pairs, "T3.15a", "compositions (1,2^k,1)"},
    {Claim::padded_column_pairs, "C3.16a", "compositions (1^a,2^k,1^b)"},
    {Claim::trailing_one_extension, "P3.2a", "trailing-one extensions"},
}};

const ClaimInfo& info(Claim claim) {
  for (const auto& c : kClaims)
    if (c.claim == claim) return c;
  throw std::logic_error("unknown claim");
}

// What a claim says about the rim of one composition. Unset fields are
// not part of the claim.
struct Prediction {
  std::optional<bool> single;
  std::optional<std::uint64_t> count;
  std::optional<int> special_count;
  std::optional<bool> all_special;
  std::optional<std::vector<Permutation>> elements;
  std::optional<std::vector<Diagram>> diagrams;
};

std::string format(const Permutation& w) {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= w.size(); ++i) out << (i > 1 ? "," : "") << w(i);
  out << ']';
  return out.str();
}

std::string format(const Diagram& d) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& n : d.nodes()) {
    out << (first ? "" : ",") << '(' << n.row << ',' << n.col << ')';
    first = false;
  }
  out << '}';
  return out.str();
}

template <class T>
std::string format_list(const std::vector<T>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + format(items[i]);
  return out + "]";
}

std::vector<Diagram> sorted_diagrams(std::vector<Diagram> ds) {
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<Permutation> sorted_elements(std::vector<Permutation> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

std::vector<Permutation> elements_of(const std::vector<Diagram>& ds) {
  std::vector<Permutation> out;
  for (const auto& d : ds) out.push_back(w_of_diagram(d));
  return sorted_elements(std::move(out));
}

// Renders the fields of `p` from the actual rim, so that expected and
// observed strings are directly comparable.
Prediction observe(const Prediction& p, const RimResult& rim) {
  Prediction o;
  if (p.single) o.single = rim.size() == 1;
  if (p.count) o.count = static_cast<std::uint64_t>(rim.size());
  if (p.special_count) o.special_count = rim.special_count();
  if (p.all_special) o.all_special = rim.special_count() == rim.size();
  if (p.elements) o.elements = sorted_elements(rim.rim);
  if (p.diagrams) o.diagrams = sorted_diagrams(rim.diagrams);
  return o;
}

std::string describe(const Prediction& p) {
  std::string out;
  auto add = [&](const std::string& field) { out += (out.empty() ? "" : " ") + field; };
  if (p.single) add(std::string("single=") + (*p.single ? "true" : "false"));
  if (p.count) add("count=" + std::to_string(*p.count));
  if (p.special_count) add("special=" + std::to_string(*p.special_count));
  if (p.all_special) add(std::string("all_special=") + (*p.all_special ? "true" : "false"));
  if (p.elements) add("rim=" + format_list(*p.elements));
  if (p.diagrams) add("diagrams=" + format_list(*p.diagrams));
  return out;
}

bool same(const Prediction& a, const Prediction& b) {
  return a.single == b.single && a.count == b.count && a.special_count == b.special_count &&
         a.all_special == b.all_special && a.elements == b.elements && a.diagrams == b.diagrams;
}

std::optional<Diagram> shift_one_node(const Diagram& d) {
  const auto& nodes = d.nodes();
  for (std::size_t i = nodes.size(); i-- > 0;) {
    for (int delta : {1, -1}) {
      Node moved{nodes[i].row, nodes[i].col + delta};
      if (moved.col < 1 || d.contains(moved)) continue;
      auto changed = nodes;
      changed[i] = moved;
      try {
        return Diagram(std::move(changed));
      } catch (const std::invalid_argument&) {
      }
    }
  }
  return std::nullopt;
}

void inject(Prediction& p, Fault fault) {
  if (fault == Fault::wrong_count) {
    if (p.count) {
      *p.count += 1;
      return;
    }
  } else if (fault == Fault::wrong_column) {
    if (p.diagrams && !p.diagrams->empty()) {
      if (auto moved = shift_one_node(p.diagrams->front())) {
        p.diagrams->front() = *moved;
        *p.diagrams = sorted_diagrams(std::move(*p.diagrams));
        return;
      }
    }
    if (p.elements && !p.elements->empty() && p.elements->front().size() >= 2) {
      auto row = p.elements->front().row_form();
      std::swap(row[0], row[1]);
      p.elements->front() = Permutation(std::move(row));
      *p.elements = sorted_elements(std::move(*p.elements));
      return;
    }
  }
  if (p.single) *p.single = !*p.single;
}

std::optional<Prediction> predict(Claim claim, const Composition& lambda, int max_n) {
  const int r = lambda.parts_count();
  const auto& parts = lambda.parts();
  Prediction p;
  switch (claim) {
    case Claim::single_element_rim:
      p.single = is_partition(lambda) || is_partition(reversed(lambda));
      return p;
    case Claim::leading_pair: {
      if (r < 3 || !std::all_of(parts.begin() + 2, parts.end(), [](int x) { return x == 1; })) return std::nullopt;
      auto diagrams = leading_pair_rim_diagrams(lambda);
      const int t = lambda[1];
      const int s = lambda[2];
      p.count = t >= s ? 1 : static_cast<std::uint64_t>(s - t + 1);
      p.all_special = true;
      p.diagrams = sorted_diagrams(*diagrams);
      p.elements = elements_of(*p.diagrams);
      return p;
    }
    case Claim::three_parts: {
      if (r != 3) return std::nullopt;
      auto diagrams = three_part_rim_diagrams(lambda);
      p.count = three_part_table_count(lambda);
      p.all_special = true;
      p.diagrams = sorted_diagrams(*diagrams);
      return p;
    }
    case Claim::column_pairs: {
      if (r < 3 || parts.front() != 1 || parts.back() != 1 ||
          !std::all_of(parts.begin() + 1, parts.end() - 1, [](int x) { return x == 2; }))
        return std::nullopt;
      p.count = static_cast<std::uint64_t>(r - 1);
      p.special_count = 2;
      p.elements = sorted_elements(column_pair_row_forms(r));
      return p;
    }
    case Claim::padded_column_pairs: {
      auto diagrams = column_pair_rim_diagrams(lambda);
      if (!diagrams) return std::nullopt;
      const auto twos = std::count(parts.begin(), parts.end(), 2);
      p.count = static_cast<std::uint64_t>(twos + 1);
      p.special_count = 2;
      p.diagrams = sorted_diagrams(*diagrams);
      return p;
    }
    case Claim::trailing_one_extension: {
      if (r < 2 || parts.back() != 1 || lambda.total() + 1 > max_n) return std::nullopt;
      const RimResult base = rim_search(lambda, {max_n});
      const RimResult extended = theta_star(base);
      p.count = static_cast<std::uint64_t>(base.size());
      p.elements = sorted_elements(extended.rim);
      p.diagrams = sorted_diagrams(extended.diagrams);
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view claim_token(Claim claim) { return info(claim).token; }

std::string_view claim_scope(Claim claim) { return info(claim).scope; }

std::optional<Claim> parse_claim(std::string_view token) {
  for (const auto& c : kClaims)
    if (c.token == token) return c.claim;
  return std::nullopt;
}

std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const auto& c : kClaims) out.push_back(c.claim);
  return out;
}

std::optional<Fault> parse_fault(std::string_view token) {
  if (token == "none") return Fault::none;
  if (token == "wrong-column" || token == "wrong_column") return Fault::wrong_column;
  if (token == "wrong-count" || token == "wrong_count") return Fault::wrong_count;
  return std::nullopt;
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

std::string VerifyReport::summary() const {
  std::string out(claim_scope(claim));
  if (passed()) return out + ": PASS";
  return out + ": FAIL (" + std::to_string(failures()) + " of " + std::to_string(checks.size()) + " mismatched)";
}

VerifyReport verify_theorem(Claim claim, int max_n, Fault fault) {
  VerifyReport report{claim, max_n, {}};
  bool injected = fault == Fault::none;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      auto prediction = predict(claim, lambda, max_n);
      if (!prediction) continue;
      if (!injected) {
        inject(*prediction, fault);
        injected = true;
      }
      // Under trailing_one_extension the observed rim is that of lambda_*.
      const Composition target = claim == Claim::trailing_one_extension ? with_trailing_one(lambda) : lambda;
      const Prediction observed = observe(*prediction, rim_search(target, {max_n}));
      report.checks.push_back({target, describe(*prediction), describe(observed), same(*prediction, observed)});
    }
  }
  return report;
}

std::vector<Permutation> column_pair_row_forms(int rows) {
  if (rows < 3) throw std::invalid_argument("column_pair_row_forms: need at least 3 rows");
  const int r = rows;
  std::vector<Permutation> out;
  for (int v = 0; v <= r - 2; ++v) {
    std::vector<int> row{v + 1};
    for (int i = 1; i <= v; ++i) {
      row.push_back(i);
      row.push_back(v + i + 1);
    }
    for (int j = 1; j <= r - 2 - v; ++j) {
      row.push_back(2 * v + 1 + j);
      row.push_back(v + r + j);
    }
    row.push_back(v + r);
    out.emplace_back(std::move(row));
  }
  return out;
}

std::uint64_t three_part_table_count(const Composition& lambda) {
  if (lambda.parts_count() != 3) throw std::invalid_argument("three_part_table_count: need 3 parts");
  std::vector<int> sorted = lambda.parts();
  std::sort(sorted.rbegin(), sorted.rend());
  const int s = sorted[0];
  const int t = sorted[1];
  const int u = sorted[2];
  const auto& p = lambda.parts();
  auto is = [&](int a, int b, int c) { return p[0] == a && p[1] == b && p[2] == c; };
  // Ties make several rows apply; they agree, so the first match is used.
  if (is(s, t, u) || is(u, t, s)) return 1;
  if (is(s, u, t) || is(t, u, s)) return binomial(t, u);
  return binomial(s - t + u, u);
}

}  // namespace klrim
