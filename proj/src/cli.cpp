#include "klrim/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "klrim/serialize.hpp"

namespace klrim::cli {

namespace {

constexpr int kDefaultVerifyBound = 7;

struct Options {
  std::string composition;
  std::string method = "search";
  std::string format = "text";
  int max_n = 0;  // 0 until given or defaulted per subcommand
  bool count_only = false;
  std::string claim;
};

std::string join(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::string describe_difference(const RimResult& closed, const RimResult& searched) {
  std::ostringstream out;
  out << "closed form and search disagree for (" << join(closed.composition.parts(), ",") << ")\n";
  for (const auto& w : closed.rim)
    if (std::find(searched.rim.begin(), searched.rim.end(), w) == searched.rim.end())
      out << "  closed form only: [" << join(w.row_form(), ",") << "]\n";
  for (const auto& w : searched.rim)
    if (std::find(closed.rim.begin(), closed.rim.end(), w) == closed.rim.end())
      out << "  search only: [" << join(w.row_form(), ",") << "]\n";
  return out.str();
}

// The rim by the requested method; sets `status` to kExitMismatch on a
// cross-check difference.
std::optional<RimResult> compute_rim(const Options& o, const Composition& lambda, std::ostream& err, int& status) {
  if (o.method == "closed") {
    auto closed = rim_closed_form(lambda);
    if (!closed) {
      err << "no closed form is known for (" << join(lambda.parts(), ",") << ")\n";
      status = kExitBadInput;
    }
    return closed;
  }
  RimResult searched = rim_search(lambda, {o.max_n});
  if (o.method == "cross-check") {
    if (auto closed = rim_closed_form(lambda)) {
      if (!(*closed == searched)) {
        err << describe_difference(*closed, searched);
        status = kExitMismatch;
      }
    } else {
      err << "no closed form for (" << join(lambda.parts(), ",") << "); reporting the search result only\n";
    }
  }
  return searched;
}

int run_rim(const Options& o, std::ostream& out, std::ostream& err) {
  const Composition lambda = parse_composition(o.composition);
  int status = kExitOk;
  auto rim = compute_rim(o, lambda, err, status);
  if (!rim) return status;
  if (o.count_only) {
    if (o.format == "json")
      out << json{{"count", rim->size()}}.dump() << '\n';
    else
      out << rim->size() << '\n';
  } else if (o.format == "json") {
    out << to_json(*rim).dump() << '\n';
  } else {
    out << render_text(*rim);
  }
  return status;
}

int run_cell(const Options& o, std::ostream& out, std::ostream& err) {
  const Composition lambda = parse_composition(o.composition);
  if (o.count_only) {
    const auto size = cell_size(lambda);
    if (o.format == "json")
      out << json{{"count", size}}.dump() << '\n';
    else
      out << size << '\n';
    return kExitOk;
  }
  int status = kExitOk;
  auto rim = compute_rim(o, lambda, err, status);
  if (!rim) return status;
  for_each_cell_element(*rim, [&](const Permutation& w, const Word& word) {
    if (o.format == "json")
      out << json{{"row_form", w.row_form()}, {"reduced_word", word}}.dump() << '\n';
    else
      out << '[' << join(w.row_form(), ",") << "]  " << join(word, " ") << '\n';
  });
  return status;
}

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON on standard input: ") + e.what());
  }
}

int run_order_path(const Options& o, std::istream& in, std::ostream& out) {
  const KPath ordered = order_kpath(kpath_from_json(read_json(in)));
  if (o.format == "json") {
    out << to_json(ordered).dump() << '\n';
  } else {
    for (const auto& path : ordered.paths()) {
      std::string line;
      for (const auto& n : path) line += (line.empty() ? "" : " ") + ("(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")");
      out << line << '\n';
    }
  }
  return kExitOk;
}

int run_admissible(const Options& o, std::istream& in, std::ostream& out) {
  const Diagram d = diagram_from_json(read_json(in));
  const bool admissible = is_admissible(d);
  const Partition type = subsequence_type(d);
  if (o.format == "json")
    out << json{{"admissible", admissible}, {"subsequence_type", type.parts()}}.dump() << '\n';
  else
    out << (admissible ? "admissible" : "not admissible") << ", subsequence type (" << join(type.parts(), ",")
        << ")\n";
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err, Fault fault) {
  std::vector<Claim> claims;
  if (o.claim == "all") {
    claims = all_claims();
  } else if (auto claim = parse_claim(o.claim)) {
    claims.push_back(*claim);
  } else {
    err << "unknown claim \"" << o.claim << "\"; expected all";
    for (auto c : all_claims()) err << ", " << claim_token(c);
    err << '\n';
    return kExitBadInput;
  }
  bool all_passed = true;
  json reports = json::array();
  for (Claim claim : claims) {
    const VerifyReport report = verify_theorem(claim, o.max_n, fault);
    all_passed = all_passed && report.passed();
    if (o.format == "json") {
      json failures = json::array();
      for (const auto& c : report.checks)
        if (!c.pass)
          failures.push_back({{"composition", to_json(c.composition)}, {"expected", c.expected}, {"observed", c.observed}});
      reports.push_back({{"claim", claim_token(claim)},
                         {"scope", claim_scope(claim)},
                         {"max_n", o.max_n},
                         {"checks", report.checks.size()},
                         {"pass", report.passed()},
                         {"failures", failures}});
    } else {
      out << report.summary() << '\n';
      for (const auto& c : report.checks)
        if (!c.pass)
          out << "  (" << join(c.composition.parts(), ",") << ")\n    expected " << c.expected << "\n    observed "
              << c.observed << '\n';
    }
  }
  if (o.format == "json") out << (claims.size() == 1 ? reports.front() : reports).dump() << '\n';
  return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err, Fault fault) {
  CLI::App app{"Kazhdan-Lusztig right cells of symmetric groups attached to compositions", "klrim"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_max_n = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "Largest n searched exhaustively")->check(CLI::PositiveNumber);
  };
  auto add_rim_options = [&](CLI::App* sub) {
    sub->add_option("--composition", o.composition, "Comma-separated positive parts, e.g. 2,1,3")->required();
    sub->add_option("--method", o.method, "How the rim is obtained")
        ->check(CLI::IsMember({"closed", "search", "cross-check"}));
    sub->add_flag("--count-only", o.count_only, "Print only the number of elements");
    add_format(sub);
    add_max_n(sub);
  };

  auto* rim = app.add_subcommand("rim", "The rim Y(lambda) with its diagrams");
  add_rim_options(rim);
  auto* cell = app.add_subcommand("cell", "Every element of the right cell with a reduced word");
  add_rim_options(cell);
  auto* order = app.add_subcommand("order-path", "Order a k-path read as JSON from standard input");
  add_format(order);
  auto* verify = app.add_subcommand("verify", "Check a rim statement against exhaustive search");
  verify->add_option("claim", o.claim, "Claim token, or all")->required();
  add_format(verify);
  add_max_n(verify);
  auto* admissible = app.add_subcommand("admissible", "Subsequence type and admissibility of a diagram read from standard input");
  add_format(admissible);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }
  if (o.max_n == 0) o.max_n = verify->parsed() ? kDefaultVerifyBound : default_search_bound();

  try {
    if (rim->parsed()) return run_rim(o, out, err);
    if (cell->parsed()) return run_cell(o, out, err);
    if (order->parsed()) return run_order_path(o, in, out);
    if (admissible->parsed()) return run_admissible(o, in, out);
    return run_verify(o, out, err, fault);
  } catch (const BoundExceeded& e) {
    err << e.what() << " (raise it with --max-n or KLRIM_MAX_N)\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  } catch (const NoAdmissibleExtension& e) {
    err << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace klrim::cli
