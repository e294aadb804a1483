#include "wqo/ordinal.hpp"

#include "text_cursor.hpp"
#include "wqo/errors.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace wqo {

using Term = Ordinal::Term;

namespace {

const Ordinal& one_ordinal() {
  static const Ordinal o(1);
  return o;
}

// Appends w^e*c to a term list whose exponents are all >= e, merging equal exponents.
void push_term(std::vector<Term>& terms, const Ordinal& e, const Natural& c) {
  if (c == 0) return;
  if (!terms.empty() && terms.back().exponent == e) {
    terms.back().coefficient += c;
    return;
  }
  terms.push_back(Term{e, c});
}

// Keeps the terms whose exponent is >= e.
Ordinal truncate_below(const Ordinal& a, const Ordinal& e) {
  std::vector<Term> kept;
  for (const auto& t : a.terms()) {
    if (t.exponent < e) break;
    kept.push_back(t);
  }
  return Ordinal::from_terms(std::move(kept));
}

// a with one copy of its last term removed (a = rest + w^e).
Ordinal drop_last_unit(const Ordinal& a) {
  std::vector<Term> terms = a.terms();
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  return Ordinal::from_terms(std::move(terms));
}

// sup{a' (+) delta : a' < a} for limit a.
Ordinal sup_left(const Ordinal& a, const Ordinal& delta) {
  const Ordinal& e = a.trailing_exponent();
  return add(truncate_below(nat_sum(drop_last_unit(a), delta), e), omega_pow(e));
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n != 0) terms_.push_back(Term{Ordinal(), Natural(n)});
}

Ordinal::Ordinal(const Natural& n) {
  if (n < 0) throw DomainError("ordinal from a negative integer");
  if (n != 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return monomial(Ordinal(1)); }

Ordinal Ordinal::monomial(Ordinal exponent, Natural coefficient) {
  Ordinal r;
  if (coefficient < 0) throw DomainError("negative coefficient");
  if (coefficient != 0) r.terms_.push_back(Term{std::move(exponent), std::move(coefficient)});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw DomainError("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw DomainError("CNF exponents must be strictly decreasing");
    }
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const { return terms_.empty() || terms_.front().exponent.is_zero(); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

bool Ordinal::is_additively_indecomposable() const {
  return terms_.size() == 1 && terms_.front().coefficient == 1;
}

bool Ordinal::is_multiplicatively_indecomposable() const {
  return is_additively_indecomposable() && terms_.front().exponent.is_additively_indecomposable();
}

std::optional<Natural> Ordinal::finite_value() const {
  if (terms_.empty()) return Natural(0);
  if (!is_finite()) return std::nullopt;
  return terms_.front().coefficient;
}

Natural Ordinal::finite_part() const { return is_successor() ? terms_.back().coefficient : Natural(0); }

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero has no leading exponent");
  return terms_.front().exponent;
}

const Ordinal& Ordinal::trailing_exponent() const {
  if (terms_.empty()) throw DomainError("zero has no trailing exponent");
  return terms_.back().exponent;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == 0; }

bool operator==(const Ordinal::Term& a, const Ordinal::Term& b) {
  return a.exponent == b.exponent && a.coefficient == b.coefficient;
}

OrdinalClass classify(const Ordinal& a) {
  OrdinalClass c;
  c.is_zero = a.is_zero();
  c.is_finite = a.is_finite();
  c.is_successor = a.is_successor();
  c.is_limit = a.is_limit();
  c.is_additively_indecomposable = a.is_additively_indecomposable();
  c.is_multiplicatively_indecomposable = a.is_multiplicatively_indecomposable();
  return c;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.leading_exponent();
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    terms.push_back(t);
  }
  for (const auto& t : b.terms()) push_term(terms, t.exponent, t.coefficient);
  return Ordinal::from_terms(std::move(terms));
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw DomainError("left_subtract(a, b) requires a <= b");
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  if (i == x.size()) return Ordinal::from_terms({y.begin() + static_cast<std::ptrdiff_t>(i), y.end()});
  // a < b and they first differ at term i; the remaining terms of a are absorbed.
  std::vector<Term> rest;
  if (x[i].exponent == y[i].exponent) {
    rest.push_back(Term{y[i].exponent, y[i].coefficient - x[i].coefficient});
  } else {
    rest.push_back(y[i]);
  }
  rest.insert(rest.end(), y.begin() + static_cast<std::ptrdiff_t>(i) + 1, y.end());
  return Ordinal::from_terms(std::move(rest));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead = a.leading_exponent();
  Ordinal result;
  for (const auto& t : b.terms()) {
    if (t.exponent.is_zero()) {
      // a * n: the leading coefficient is multiplied, lower terms of a survive once.
      std::vector<Term> terms = a.terms();
      terms.front().coefficient *= t.coefficient;
      result = add(result, Ordinal::from_terms(std::move(terms)));
    } else {
      result = add(result, Ordinal::monomial(add(lead, t.exponent), t.coefficient));
    }
  }
  return result;
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal::monomial(a); }

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw DomainError("predecessor of a non-successor ordinal");
  return drop_last_unit(a);
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> terms;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      terms.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      terms.push_back(y[j++]);
    } else {
      terms.push_back(Term{x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  Ordinal result;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      result = nat_sum(result, Ordinal::monomial(nat_sum(s.exponent, t.exponent),
                                                 s.coefficient * t.coefficient));
    }
  }
  return result;
}

OmegaDecomposition decompose_omega(const Ordinal& a) {
  OmegaDecomposition d;
  std::vector<Term> quotient;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero()) {
      d.remainder = t.coefficient;
    } else if (t.exponent.is_finite()) {
      quotient.push_back(Term{predecessor(t.exponent), t.coefficient});
    } else {
      // 1 + e = e for infinite e.
      quotient.push_back(t);
    }
  }
  d.quotient = Ordinal::from_terms(std::move(quotient));
  return d;
}

Ordinal two_pow(const Ordinal& a) {
  const auto d = decompose_omega(a);
  if (d.remainder > 1'000'000) throw DomainError("2^n with n too large to materialize");
  const Natural factor = Natural(1) << static_cast<unsigned>(d.remainder);
  return Ordinal::monomial(d.quotient, factor);
}

Ordinal hat_nat_sum(const Ordinal& a, const Ordinal& b, HatSumVariant variant) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  if (a.is_successor() && b.is_successor()) {
    Ordinal s = nat_sum(predecessor(a), predecessor(b));
    return variant == HatSumVariant::successor_sup ? add(s, one_ordinal()) : s;
  }
  // At least one limit argument: the supremum is not attained, so the +1 is absorbed.
  if (a.is_successor()) return sup_left(b, predecessor(a));
  if (b.is_successor()) return sup_left(a, predecessor(b));
  const Ordinal& e = std::max(a.trailing_exponent(), b.trailing_exponent());
  return add(truncate_below(nat_sum(drop_last_unit(a), drop_last_unit(b)), e), omega_pow(e));
}

Ordinal pm(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("pm(0) is undefined");
  if (a.is_finite()) return predecessor(a);
  // The epsilon-number branch (a = eps + n) is unreachable below epsilon_0.
  return a;
}

Ordinal oprim(const Ordinal& a) {
  // a = eps + n never holds below epsilon_0.
  return a;
}

Ordinal hat(const Ordinal& a) {
  std::vector<Term> terms;
  for (const auto& t : a.terms()) push_term(terms, oprim(t.exponent), t.coefficient);
  return Ordinal::from_terms(std::move(terms));
}

Ordinal hstar(const Ordinal& h) {
  if (h.is_additively_indecomposable() && h >= Ordinal::omega()) return h;
  return mul(h, Ordinal::omega());
}

Ordinal odot(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal();
  if (auto n = b.finite_value()) {
    // a (.) (m + 1) = (a (.) m) (+) a
    return nat_prod(a, Ordinal(*n));
  }
  if (!a.is_additively_indecomposable()) {
    throw UnsupportedError("unsupported-odot", "left operand " + to_string(a) +
                                                   " is not additively indecomposable");
  }
  const Ordinal& e = a.leading_exponent();
  Ordinal result;
  for (const auto& t : b.terms()) {
    result = add(result, Ordinal::monomial(add(e, t.exponent), t.coefficient));
  }
  return result;
}

Ordinal sum_omega_powers(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("sum_omega_powers(0) is undefined");
  if (a.is_successor()) {
    Ordinal g = predecessor(a);
    if (g.is_limit()) return Ordinal::monomial(g, 2);
    return omega_pow(g);
  }
  return omega_pow(a);
}

namespace {

void write_ordinal(std::string& out, const Ordinal& a);

void write_atom(std::string& out, const Ordinal& e) {
  if (e.is_finite()) {
    out += e.finite_value()->str();
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    write_ordinal(out, e);
    out += ')';
  }
}

void write_ordinal(std::string& out, const Ordinal& a) {
  if (a.is_zero()) {
    out += '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != one_ordinal()) {
      out += '^';
      write_atom(out, t.exponent);
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.str();
    }
  }
}

Ordinal read_atom(detail::TextCursor& in) {
  if (in.peek_digit()) return Ordinal(in.natural());
  if (in.accept("w")) return Ordinal::omega();
  if (in.accept("(")) {
    Ordinal e = detail::read_ordinal(in);
    in.expect(")");
    return e;
  }
  in.fail({"natural number", "'w'", "'('"}, "bad exponent");
}

Ordinal read_term(detail::TextCursor& in) {
  if (in.peek_digit()) return Ordinal(in.natural());
  if (!in.accept("w")) in.fail({"natural number", "'w'"}, "bad ordinal term");
  Ordinal exponent(1);
  if (in.peek() == '^' && in.peek_raw(1) != '<') {
    in.expect("^");
    exponent = read_atom(in);
  }
  Natural coefficient = 1;
  if (in.peek() == '*' && std::isdigit(static_cast<unsigned char>(in.peek(1))) != 0) {
    in.expect("*");
    coefficient = in.natural();
    if (coefficient == 0) in.fail({"positive coefficient"}, "zero coefficient");
  }
  return Ordinal::monomial(std::move(exponent), std::move(coefficient));
}

}  // namespace

namespace detail {

Ordinal read_ordinal(TextCursor& in) {
  Ordinal value = read_term(in);
  while (in.peek() == '+' && in.peek(1) != '+') {
    in.expect("+");
    value = add(value, read_term(in));
  }
  return value;
}

}  // namespace detail

std::string to_string(const Ordinal& a) {
  std::string out;
  write_ordinal(out, a);
  return out;
}

Ordinal parse_ordinal(std::string_view text) {
  detail::TextCursor in(text);
  Ordinal value = detail::read_ordinal(in);
  if (!in.at_end()) in.fail({"'+'", "end of input"}, "trailing input");
  return value;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << to_string(a); }

}  // namespace wqo
