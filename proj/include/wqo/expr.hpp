#pragma once

// Expression trees denoting well-quasi-orders built from ordinals, antichains and
// the classical constructions.

#include "wqo/ordinal.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

enum class Kind : std::uint8_t {
  ord,          // the well-order (a, <)
  gamma,        // antichain of k elements
  disj_union,   // A | B
  lex_sum,      // A ++ B
  cart_prod,    // A * B
  lex_prod,     // A . B (priority on the right component)
  words,        // A^<w under subword embedding
  multisets,    // finite multisets under multiset embedding
  multisets_n,  // multisets of exactly n elements
  pf,           // finite subsets under Hoare embedding
  pf_plus,      // nonempty finite subsets
  phi,          // FPhi family member
  sim,          // FSim family member
  sim_ext,      // extended FSim family member (FSim_a + 1) * G(m)
};

std::string_view kind_name(Kind k);

/// Immutable expression node handle with value semantics; copies share structure.
class Expr {
 public:
  static Expr ord(Ordinal a);
  static Expr gamma(std::uint64_t k);
  static Expr disj_union(Expr l, Expr r);
  static Expr lex_sum(Expr l, Expr r);
  static Expr cart_prod(Expr l, Expr r);
  static Expr lex_prod(Expr l, Expr r);
  static Expr words(Expr e);
  static Expr multisets(Expr e);
  static Expr multisets_n(Expr e, std::uint64_t n);
  static Expr pf(Expr e);
  static Expr pf_plus(Expr e);
  static Expr phi(Ordinal a);
  static Expr sim(Ordinal a);
  static Expr sim_ext(Ordinal a, std::uint64_t m);

  /// Same node kind and scalars, new children.
  Expr with_children(std::vector<Expr> children) const;

  Kind kind() const noexcept;
  std::span<const Expr> children() const noexcept;
  const Expr& child(std::size_t i) const;
  const Expr& left() const { return child(0); }
  const Expr& right() const { return child(1); }
  /// Ordinal payload of ord/phi/sim/sim_ext.
  const Ordinal& ordinal() const;
  /// Natural payload: k of gamma, n of multisets_n, m of sim_ext.
  std::uint64_t count() const;

  bool is_binary() const noexcept;
  std::size_t size() const;  // node count

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Structural total order; equality is structural identity.
std::strong_ordering operator<=>(const Expr& a, const Expr& b);
bool operator==(const Expr& a, const Expr& b);

/// Grammar (ASCII):
///   expr   := sum ('++' sum)*            lexicographic sum ('+' is accepted too)
///   sum    := term ('|' term)*           disjoint union
///   term   := factor (('*' | '.') factor)*
///   factor := base ['^<w']
///   base   := 'o(' ord ')' | bare ordinal term | 'G(' NAT ')' | 'Pf(' expr ')' | 'Pf+(' expr ')'
///           | 'M(' expr ')' | 'Mn(' expr ',' NAT ')' | 'Phi(' ord ')' | 'Sim(' ord ')'
///           | 'SimExt(' ord ',' NAT ')' | '(' expr ')'
/// A bare ordinal term is NAT, 'w' or 'w^' atom; coefficients and sums need 'o(...)'.
Expr parse_expr(std::string_view text);
std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);

/// Indecomposable ordinals >= w^w closed under |, *, ^<w, M and Pf.
bool is_elementary(const Expr& e);
/// w closed under |, *, ^<w, M and Pf.
bool is_omega_elementary(const Expr& e);
/// Finite as a set. With allow_bounded_words, ^<w and M count as finite
/// (the oracle truncates them to a length cap).
bool is_finite_expr(const Expr& e, bool allow_bounded_words = false);

}  // namespace wqo
