#pragma once

// Ordinals below epsilon_0 in Cantor normal form, with the arithmetic needed to
// evaluate ordinal invariants of well-quasi-orders.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

using Natural = boost::multiprecision::cpp_int;

/// An ordinal w^e1*c1 + ... + w^en*cn with e1 > ... > en and every ci >= 1.
///
/// Exponents are themselves Ordinals, so every value is structurally finite and
/// lies below epsilon_0. The representation is canonical: two values denote the
/// same ordinal iff they compare equal member-wise.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor): finite ordinals read naturally
  explicit Ordinal(const Natural& n);

  static Ordinal omega();
  /// w^exponent * coefficient; coefficient 0 yields zero.
  static Ordinal monomial(Ordinal exponent, Natural coefficient = 1);
  /// Builds from terms that are already in Cantor normal form; throws DomainError otherwise.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  bool is_additively_indecomposable() const;
  /// w^(w^g) shapes only; 0, 1 and 2 are excluded.
  bool is_multiplicatively_indecomposable() const;

  /// The value when finite.
  std::optional<Natural> finite_value() const;
  /// The finite tail n of the decomposition this = w*a' + n.
  Natural finite_part() const;

  /// Exponent of the most significant term; zero has none.
  const Ordinal& leading_exponent() const;
  /// Exponent of the least significant term; zero has none.
  const Ordinal& trailing_exponent() const;

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Natural coefficient;
};

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal::Term& a, const Ordinal::Term& b);

struct OrdinalClass {
  bool is_zero = false;
  bool is_finite = false;
  bool is_successor = false;
  bool is_limit = false;
  bool is_additively_indecomposable = false;
  bool is_multiplicatively_indecomposable = false;
};

OrdinalClass classify(const Ordinal& a);

// Classical operations.
Ordinal add(const Ordinal& a, const Ordinal& b);
/// The unique c with a + c = b; requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);
/// Predecessor of a successor ordinal.
Ordinal predecessor(const Ordinal& a);

// Natural (Hessenberg) operations.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);

struct OmegaDecomposition {
  Ordinal quotient;   // a'
  Natural remainder;  // n
};

/// Writes a = w*a' + n.
OmegaDecomposition decompose_omega(const Ordinal& a);
/// 2^a = w^a' * 2^n where a = w*a' + n.
Ordinal two_pow(const Ordinal& a);

enum class HatSumVariant {
  /// sup{(a' (+) b') + 1 : a' < a, b' < b}, the variant consistent with finite chain products.
  successor_sup,
  /// sup{a' (+) b' : a' < a, b' < b}, kept for comparison only.
  plain_sup,
};

/// The ordinal used for the height of a Cartesian product.
Ordinal hat_nat_sum(const Ordinal& a, const Ordinal& b,
                    HatSumVariant variant = HatSumVariant::successor_sup);

/// a - 1 for finite a > 0, a otherwise (no epsilon number lies below epsilon_0).
Ordinal pm(const Ordinal& a);
Ordinal oprim(const Ordinal& a);
Ordinal hat(const Ordinal& a);
/// h when h is additively indecomposable and >= w, h*w otherwise.
Ordinal hstar(const Ordinal& h);

/// Closed form of the product used for the width of a lexicographic product.
///
/// Any left operand is accepted when b is finite (a (+) ... (+) a, b times);
/// otherwise a must be additively indecomposable, else UnsupportedError("unsupported-odot").
Ordinal odot(const Ordinal& a, const Ordinal& b);

/// Sum of w^b over all b < a; requires a > 0.
Ordinal sum_omega_powers(const Ordinal& a);

// Text syntax: ord := term ('+' term)*; term := 'w' ['^' atom] ['*' nat] | nat;
// atom := nat | 'w' | '(' ord ')'. Parsing accepts non-canonical sums (1+w == w).
std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace wqo
