#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klrim/rims.hpp"

namespace klrim {

/// Rim statements that can be checked against exhaustive search.
enum class Claim {
  single_element_rim,      // |Y| = 1 iff lambda or its reverse is a partition
  leading_pair,            // (t,s,1^k): the leading_pair_diagram family, s-t+1 of them
  three_parts,             // every 3-part composition: binomial counts, all special
  column_pairs,            // (1,2^k,1): k+1 elements, 2 special, explicit row-forms
  padded_column_pairs,     // (1^a,2^k,1^b): k+1 elements, 2 special
  trailing_one_extension,  // theta_star is a bijection onto the rim of lambda_*
};

/// Command-line identifiers ("T2.16a", ...) of each claim.
std::string_view claim_token(Claim claim);
std::optional<Claim> parse_claim(std::string_view token);
std::vector<Claim> all_claims();
/// Human label for the summary line, e.g. "all 3-part compositions".
std::string_view claim_scope(Claim claim);

/// Deliberate corruption of the first prediction checked, used to show
/// that the harness notices a wrong prediction.
enum class Fault {
  none,
  wrong_column,  // move one node of a predicted diagram (or alter a row-form / flip a boolean)
  wrong_count,   // predicted count off by one
};

std::optional<Fault> parse_fault(std::string_view token);

struct CheckRecord {
  Composition composition;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerifyReport {
  Claim claim;
  int max_n = 0;
  std::vector<CheckRecord> checks;

  bool passed() const;
  int failures() const;
  /// "<scope>: PASS" or "<scope>: FAIL (m of c mismatched)".
  std::string summary() const;
};

/// Compares rim_search with the claim's prediction for every applicable
/// composition of n <= max_n.
VerifyReport verify_theorem(Claim claim, int max_n, Fault fault = Fault::none);

/// Row-forms of the rim of (1,2^{rows-2},1) written out directly.
std::vector<Permutation> column_pair_row_forms(int rows);
/// The count column of the three-part table for a 3-part composition.
std::uint64_t three_part_table_count(const Composition& lambda);

}  // namespace klrim
