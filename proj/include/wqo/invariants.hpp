#pragma once

// Maximal order type, height and width of wqo expressions, each reported as an
// exact value, an interval, a lower bound, or an explanation of why no value is known.

#include "wqo/expr.hpp"
#include "wqo/ordinal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wqo {

class InvariantResult {
 public:
  enum class Kind { exact, interval, lower, unsupported };

  static InvariantResult exact(Ordinal v);
  /// Collapses to exact when lower == upper (and no modifier is set).
  /// With finite_multiple the upper bound is upper * m for an unknown finite m.
  static InvariantResult interval(Ordinal lower, Ordinal upper, bool finite_multiple = false);
  static InvariantResult lower_only(Ordinal lower);
  static InvariantResult unsupported(std::string reason, std::string detail = {});
  static InvariantResult hypothesis_not_met(const std::string& rule, const std::string& condition);

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::exact; }
  bool is_unsupported() const noexcept { return kind_ == Kind::unsupported; }
  bool has_upper() const noexcept { return kind_ == Kind::exact || kind_ == Kind::interval; }
  bool finite_multiple() const noexcept { return finite_multiple_; }
  /// Exact value, or the lower bound of an interval / lower-only result.
  const Ordinal& value() const;
  const Ordinal& lower() const { return value(); }
  const Ordinal& upper() const;
  const std::string& reason() const noexcept { return reason_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Whether an actual invariant value is consistent with this result.
  bool contains(const Ordinal& v) const;

  friend bool operator==(const InvariantResult&, const InvariantResult&) = default;

 private:
  Kind kind_ = Kind::unsupported;
  Ordinal lower_;
  Ordinal upper_;
  bool finite_multiple_ = false;
  std::string reason_;
  std::string detail_;
};

std::string to_string(const InvariantResult& r);

struct InvariantReport {
  InvariantResult mot;
  InvariantResult height;
  InvariantResult width;
  std::optional<Ordinal> weak_mot;
  std::vector<std::string> notes;  // identifiers of the rules that fired, in order, deduplicated

  bool fully_exact() const { return mot.is_exact() && height.is_exact() && width.is_exact(); }
  bool any_hypothesis_failure() const;
  bool any_unsupported() const;
};

/// Full dispatch: family expansion, Pf elimination, elementary tables, compositional
/// rules with hypothesis checks, family results, and powerset bounds.
/// Throws InternalError if a fully exact report violates o <= h (x) w, h <= o or w <= o.
InvariantReport invariants(const Expr& e);

/// Weakened maximal order type of an elementary expression (evaluated on its normal form).
/// Throws DomainError on non-elementary input and InternalError if a step is not
/// multiplicatively indecomposable.
Ordinal weak_mot(const Expr& e);

/// Bounds for Pf(e) computed from the invariants of e.
InvariantReport pf_bounds(const Expr& e);
/// Bounds for Pf(A) from exact invariants of A.
InvariantReport pf_bounds(const Ordinal& o, const Ordinal& h, const Ordinal& w);

/// FPhi_a: o = w = a, h = w^(leading exponent of a). Throws DomainError for a = 0.
InvariantReport phi_invariants(const Ordinal& a);
/// Pf(FPhi_a): o = w = 2^a for infinite a (height bounded only); Pf(G(k)) for finite a = k.
InvariantReport pf_phi_invariants(const Ordinal& a);

struct SimReport {
  InvariantReport member;    // FSim_a, or (FSim_a + 1) * G(m)
  InvariantReport powerset;  // Pf of the member
};

/// FSim_a when ext_m is empty, else the extended member (FSim_a + 1) * G(m).
/// Requires a = w or a >= w^w multiplicatively indecomposable (HypothesisError otherwise).
SimReport sim_invariants(const Ordinal& a, std::optional<std::uint64_t> ext_m = std::nullopt);

std::string report_to_json(const InvariantReport& r);
std::string report_to_text(const InvariantReport& r);

}  // namespace wqo
