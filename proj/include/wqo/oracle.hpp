#pragma once

// Explicit finite quasi-orders: construction from expressions, brute-force
// invariants, quotient, isomorphism, and comparison against the invariant engine.

#include "wqo/expr.hpp"
#include "wqo/invariants.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wqo {

inline constexpr std::size_t kOracleMaxElements = 5000;
inline constexpr std::size_t kResidualMaxElements = 20;
inline constexpr std::size_t kIsoMaxElements = 14;

/// A reflexive, transitive relation on {0, ..., n-1}.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// Discrete order (only reflexive pairs).
  explicit FinitePoset(std::size_t n);
  /// Reflexive-transitive closure of the given pairs (i <= j). Cycles become equivalences.
  static FinitePoset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * n_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return leq(i, j) && !leq(j, i); }
  bool equiv(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
  bool incomparable(std::size_t i, std::size_t j) const { return !leq(i, j) && !leq(j, i); }

  /// Throws DomainError unless the relation is reflexive and transitive.
  void validate() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  friend class PosetBuilder;
  void set(std::size_t i, std::size_t j) { rel_[i * n_ + j] = 1; }
  void close();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

/// Materializes a finite expression. Words and M need word_len_cap and are truncated to
/// words / multisets of at most that many letters. Throws DomainError on infinite input and
/// TooLargeError above kOracleMaxElements elements.
FinitePoset build(const Expr& e, std::optional<std::size_t> word_len_cap = std::nullopt);

/// Element count build() would produce, saturating; nullopt for infinite expressions.
std::optional<std::size_t> build_size(const Expr& e, std::optional<std::size_t> word_len_cap = std::nullopt);

/// The constructions on explicit quasi-orders. Lexicographic products give priority to
/// the right component. Throw TooLargeError above kOracleMaxElements elements.
FinitePoset poset_union(const FinitePoset& a, const FinitePoset& b);
FinitePoset poset_lex_sum(const FinitePoset& a, const FinitePoset& b);
FinitePoset poset_product(const FinitePoset& a, const FinitePoset& b);
FinitePoset poset_lex_product(const FinitePoset& a, const FinitePoset& b);
/// All subsets (nonempty ones only if requested) under the Hoare embedding.
FinitePoset poset_powerset(const FinitePoset& a, bool nonempty = false);

/// Antisymmetric poset on the equivalence classes, classes numbered by first member.
FinitePoset quotient(const FinitePoset& p);

/// Direct combinatorial values: class count, longest strict chain, largest antichain (Dilworth).
std::uint64_t mot_direct(const FinitePoset& p);
std::uint64_t height_direct(const FinitePoset& p);
std::uint64_t width_direct(const FinitePoset& p);

struct ResidualRanks {
  std::uint64_t mot, height, width;
};
/// o, h, w via the residual equations o(A) = max_x o(A_{not >= x}) + 1 and the analogues
/// with A_{<x} and A_{incomparable x}, memoized on bitmasks. Throws TooLargeError above
/// kResidualMaxElements elements.
ResidualRanks residual_ranks(const FinitePoset& p);

struct OracleReport {
  std::size_t elements = 0;
  std::size_t classes = 0;
  std::uint64_t mot = 0, height = 0, width = 0;
  bool residual_checked = false;  // the residual equations were evaluated and agreed
};

/// Direct values, cross-checked with the residual equations when the quotient has at most
/// kResidualMaxElements classes. Throws InternalError on disagreement.
OracleReport measure(const FinitePoset& p);

/// Isomorphism of the quotients. Throws TooLargeError above kIsoMaxElements classes.
bool iso(const FinitePoset& p, const FinitePoset& q);

enum class CheckStatus { match, contained, mismatch, not_compared };
std::string_view status_name(CheckStatus s);

struct CheckEntry {
  std::string invariant;  // "mot", "height", "width"
  InvariantResult engine;
  std::uint64_t oracle = 0;
  CheckStatus status = CheckStatus::not_compared;
};

struct CheckReport {
  OracleReport oracle;
  InvariantReport engine;
  std::array<CheckEntry, 3> entries;

  bool ok() const;
  std::size_t exact_matches() const;
};

/// Exact engine values must equal the oracle; bounds must contain it.
/// Engine errors are recorded as not_compared. Throws DomainError on infinite input.
CheckReport check_engine(const Expr& e);

/// Random DAG with the given edge density, transitively closed, then each element is glued to
/// a random earlier one (made equivalent) with probability glue.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double density, double glue);

/// Random finite expression whose built poset has at most max_elements elements.
Expr random_finite_expr(std::mt19937_64& rng, std::size_t max_elements);

/// {"n": int, "leq": [[i, j], ...]}. Throws ParseError on malformed input.
FinitePoset poset_from_json(std::string_view text);
std::string poset_to_json(const FinitePoset& p);

std::string oracle_to_json(const OracleReport& r);
std::string oracle_to_text(const OracleReport& r);
std::string check_to_json(const CheckReport& r);
std::string check_to_text(const CheckReport& r);

}  // namespace wqo
