#include "wqo/cli.hpp"

#include "wqo/errors.hpp"
#include "wqo/invariants.hpp"
#include "wqo/oracle.hpp"
#include "wqo/rewrite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wqo::cli {
namespace {

struct Options {
  bool json = false;
  bool trace = false;
  bool outermost = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> word_len_cap;
  std::string expr;
  std::string expr2;
  std::string poset_file;
  std::size_t random = 0;
  std::size_t max_elements = 300;
};

int report_exit(const InvariantReport& r) {
  if (r.any_hypothesis_failure()) return kHypothesisNotMet;
  if (r.any_unsupported()) return kUnsupported;
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto r = invariants(parse_expr(o.expr));
  out << (o.json ? report_to_json(r) + "\n" : report_to_text(r));
  return report_exit(r);
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const auto r = pf_bounds(parse_expr(o.expr));
  out << (o.json ? report_to_json(r) + "\n" : report_to_text(r));
  return report_exit(r);
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const Expr e = parse_expr(o.expr);
  const bool elementary = is_elementary(e);
  const Strategy s = o.outermost ? Strategy::leftmost_outermost : Strategy::leftmost_innermost;
  const Normalized n = elementary ? normalize_elementary(e, s) : eliminate_pf_traced(e);
  const char* system = elementary ? "elementary" : "powerset-elimination";
  if (o.json) {
    nlohmann::json j{{"normal_form", to_string(n.expr)}, {"rules", system}};
    if (o.trace) j["trace"] = nlohmann::json::parse(trace_to_json(n.trace));
    out << j.dump() << "\n";
  } else {
    out << to_string(n.expr) << "\n";
    if (o.trace) out << trace_to_json(n.trace) << "\n";
  }
  return kOk;
}

int cmd_weakmot(const Options& o, std::ostream& out) {
  const Ordinal w = weak_mot(parse_expr(o.expr));
  if (o.json) {
    out << nlohmann::json{{"weak_mot", to_string(w)}}.dump() << "\n";
  } else {
    out << to_string(w) << "\n";
  }
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, {"readable poset file"}, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.expr.empty() == o.poset_file.empty()) {
    err << "oracle needs exactly one of <expr> or --poset FILE\n";
    return kParseError;
  }
  const FinitePoset p = o.poset_file.empty() ? build(parse_expr(o.expr), o.word_len_cap)
                                             : poset_from_json(read_file(o.poset_file));
  const auto r = measure(p);
  out << (o.json ? oracle_to_json(r) + "\n" : oracle_to_text(r));
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.expr.empty() == (o.random == 0)) {
    err << "check needs exactly one of <expr> or --random N\n";
    return kParseError;
  }
  if (!o.expr.empty()) {
    const auto r = check_engine(parse_expr(o.expr));
    out << (o.json ? check_to_json(r) + "\n" : check_to_text(r));
    return r.ok() ? kOk : kMismatch;
  }
  std::mt19937_64 rng(o.seed);
  std::size_t mismatches = 0, exact = 0;
  nlohmann::json results = nlohmann::json::array();
  for (std::size_t i = 0; i < o.random; ++i) {
    const Expr e = random_finite_expr(rng, o.max_elements);
    const auto r = check_engine(e);
    mismatches += r.ok() ? 0 : 1;
    exact += r.exact_matches();
    if (o.json) {
      results.push_back({{"expr", to_string(e)}, {"ok", r.ok()}, {"exact_matches", r.exact_matches()}});
    } else {
      out << to_string(e) << "  " << (r.ok() ? "ok" : "MISMATCH") << "\n";
      if (!r.ok()) out << check_to_text(r);
    }
  }
  if (o.json) {
    out << nlohmann::json{{"seed", o.seed},
                          {"count", o.random},
                          {"mismatches", mismatches},
                          {"exact_matches", exact},
                          {"results", results}}
               .dump()
        << "\n";
  } else {
    out << "checked " << o.random << " expressions (seed " << o.seed << "): " << mismatches << " mismatches, "
        << exact << " exact matches\n";
  }
  return mismatches == 0 ? kOk : kMismatch;
}

int cmd_iso(const Options& o, std::ostream& out) {
  const bool same = iso(build(parse_expr(o.expr), o.word_len_cap), build(parse_expr(o.expr2), o.word_len_cap));
  if (o.json) {
    out << nlohmann::json{{"iso", same}}.dump() << "\n";
  } else {
    out << (same ? "isomorphic" : "not isomorphic") << "\n";
  }
  return kOk;
}

void error_json(std::ostream& out, const std::string& kind, const std::string& message) {
  out << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal invariants of well-quasi-orders", "wqo_meter"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for random sampling (WQO_METER_SEED overrides)");

  auto* inv = app.add_subcommand("invariants", "Maximal order type, height and width");
  inv->add_option("expr", o.expr)->required();
  auto* norm = app.add_subcommand("normalize", "Normal form under the rewrite rules");
  norm->add_option("expr", o.expr)->required();
  norm->add_flag("--trace", o.trace, "Print the rewrite trace as JSON");
  norm->add_flag("--outermost", o.outermost, "Leftmost-outermost instead of leftmost-innermost");
  auto* bounds = app.add_subcommand("bounds", "Bounds for the finitary powerset of the expression");
  bounds->add_option("expr", o.expr)->required();
  auto* weak = app.add_subcommand("weakmot", "Weakened maximal order type of an elementary expression");
  weak->add_option("expr", o.expr)->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force invariants of a finite expression or poset");
  oracle->add_option("expr", o.expr);
  oracle->add_option("--poset", o.poset_file, "JSON poset {\"n\": int, \"leq\": [[i, j], ...]}");
  oracle->add_option("--word-len-cap", o.word_len_cap, "Length cap for words and multisets");
  auto* check = app.add_subcommand("check", "Compare the engine with the oracle");
  check->add_option("expr", o.expr);
  check->add_option("--random", o.random, "Check this many random finite expressions");
  check->add_option("--max-elements", o.max_elements, "Size limit of random expressions");
  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test of two finite expressions");
  iso_cmd->add_option("expr1", o.expr)->required();
  iso_cmd->add_option("expr2", o.expr2)->required();
  iso_cmd->add_option("--word-len-cap", o.word_len_cap, "Length cap for words and multisets");
  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--seed", o.seed, "Seed for random sampling");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kParseError;
  }
  if (const char* env = std::getenv("WQO_METER_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "WQO_METER_SEED must be a non-negative integer\n";
      return kParseError;
    }
  }

  std::ostream& diag = o.json ? out : err;
  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    if (o.json) {
      error_json(diag, kind, message);
    } else {
      err << kind << ": " << message << "\n";
    }
    return code;
  };
  try {
    const auto* sub = app.get_subcommands().front();
    if (sub == inv) return cmd_invariants(o, out);
    if (sub == norm) return cmd_normalize(o, out);
    if (sub == bounds) return cmd_bounds(o, out);
    if (sub == weak) return cmd_weakmot(o, out);
    if (sub == oracle) return cmd_oracle(o, out, err);
    if (sub == check) return cmd_check(o, out, err);
    return cmd_iso(o, out);
  } catch (const ParseError& e) {
    return fail("parse-error", e.what(), kParseError);
  } catch (const HypothesisError& e) {
    return fail("hypothesis-not-met", e.what(), kHypothesisNotMet);
  } catch (const TooLargeError& e) {
    return fail("too-large", e.what(), kOracleTooLarge);
  } catch (const UnsupportedError& e) {
    return fail(e.code(), e.what(), kUnsupported);
  } catch (const DomainError& e) {
    return fail("out-of-domain", e.what(), kUnsupported);
  } catch (const InternalError& e) {
    return fail("internal-error", e.what(), kMismatch);
  }
}

}  // namespace wqo::cli
