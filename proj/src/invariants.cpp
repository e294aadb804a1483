#include "wqo/invariants.hpp"

#include "wqo/errors.hpp"
#include "wqo/rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace wqo {

// ---------------------------------------------------------------------------
// InvariantResult

InvariantResult InvariantResult::exact(Ordinal v) {
  InvariantResult r;
  r.kind_ = Kind::exact;
  r.lower_ = v;
  r.upper_ = std::move(v);
  return r;
}

InvariantResult InvariantResult::interval(Ordinal lower, Ordinal upper, bool finite_multiple) {
  if (upper < lower && !finite_multiple) {
    throw InternalError("interval with lower bound " + to_string(lower) + " above upper bound " + to_string(upper));
  }
  if (!finite_multiple && lower == upper) return exact(std::move(lower));
  InvariantResult r;
  r.kind_ = Kind::interval;
  r.lower_ = std::move(lower);
  r.upper_ = std::move(upper);
  r.finite_multiple_ = finite_multiple;
  return r;
}

InvariantResult InvariantResult::lower_only(Ordinal lower) {
  InvariantResult r;
  r.kind_ = Kind::lower;
  r.lower_ = std::move(lower);
  return r;
}

InvariantResult InvariantResult::unsupported(std::string reason, std::string detail) {
  InvariantResult r;
  r.kind_ = Kind::unsupported;
  r.reason_ = std::move(reason);
  r.detail_ = std::move(detail);
  return r;
}

InvariantResult InvariantResult::hypothesis_not_met(const std::string& rule, const std::string& condition) {
  return unsupported("hypothesis-not-met", rule + " requires " + condition);
}

const Ordinal& InvariantResult::value() const {
  if (kind_ == Kind::unsupported) throw InternalError("unsupported invariant has no value");
  return lower_;
}

const Ordinal& InvariantResult::upper() const {
  if (!has_upper()) throw InternalError("invariant has no upper bound");
  return upper_;
}

bool InvariantResult::contains(const Ordinal& v) const {
  switch (kind_) {
    case Kind::exact:
      return v == lower_;
    case Kind::interval:
      if (v < lower_) return false;
      if (!finite_multiple_) return v <= upper_;
      return v.is_finite() || v < mul(upper_, Ordinal::omega());
    case Kind::lower:
      return lower_ <= v;
    case Kind::unsupported:
      return true;
  }
  return true;
}

std::string to_string(const InvariantResult& r) {
  switch (r.kind()) {
    case InvariantResult::Kind::exact:
      return to_string(r.value());
    case InvariantResult::Kind::interval:
      return "[" + to_string(r.lower()) + ", " + to_string(r.upper()) + (r.finite_multiple() ? " * m]" : "]");
    case InvariantResult::Kind::lower:
      return ">= " + to_string(r.lower());
    case InvariantResult::Kind::unsupported:
      return "unsupported (" + r.reason() + (r.detail().empty() ? "" : ": " + r.detail()) + ")";
  }
  return {};
}

bool InvariantReport::any_hypothesis_failure() const {
  for (const auto* r : {&mot, &height, &width})
    if (r->is_unsupported() && r->reason() == "hypothesis-not-met") return true;
  return false;
}

bool InvariantReport::any_unsupported() const {
  return mot.is_unsupported() || height.is_unsupported() || width.is_unsupported();
}

namespace {

using Result = InvariantResult;
using Unary = std::function<Ordinal(const Ordinal&)>;
using Binary = std::function<Ordinal(const Ordinal&, const Ordinal&)>;

struct Triple {
  Result o, h, w;
};

const Ordinal kOmega = Ordinal::omega();

Result guarded(const std::function<Result()>& f) {
  try {
    return f();
  } catch (const UnsupportedError& e) {
    return Result::unsupported(e.code(), e.what());
  } catch (const DomainError& e) {
    return Result::unsupported("out-of-range", e.what());
  }
}

// Lifts a monotone operation to results: exact stays exact, intervals map endpointwise,
// anything with an unknown upper bound keeps only its lower bound.
Result lift(const Result& a, const Unary& f) {
  if (a.is_unsupported()) return a;
  return guarded([&] {
    if (a.is_exact()) return Result::exact(f(a.value()));
    if (a.kind() == Result::Kind::interval && !a.finite_multiple()) return Result::interval(f(a.lower()), f(a.upper()));
    return Result::lower_only(f(a.lower()));
  });
}

Result lift(const Result& a, const Result& b, const Binary& f) {
  if (a.is_unsupported()) return a;
  if (b.is_unsupported()) return b;
  return guarded([&] {
    if (a.is_exact() && b.is_exact()) return Result::exact(f(a.value(), b.value()));
    const bool bounded = a.has_upper() && b.has_upper() && !a.finite_multiple() && !b.finite_multiple();
    if (bounded) return Result::interval(f(a.lower(), b.lower()), f(a.upper(), b.upper()));
    return Result::lower_only(f(a.lower(), b.lower()));
  });
}

Ordinal max_of(const Ordinal& a, const Ordinal& b) { return std::max(a, b); }

bool exact_is(const Result& r, const Ordinal& v) { return r.is_exact() && r.value() == v; }

bool exact_finite(const Result& r) { return r.is_exact() && r.value().is_finite(); }

Triple uniform(const Result& r) { return {r, r, r}; }

Triple exact_triple(Ordinal o, Ordinal h, Ordinal w) {
  return {Result::exact(std::move(o)), Result::exact(std::move(h)), Result::exact(std::move(w))};
}

Natural binomial(const Natural& n, const Natural& k) {
  if (n > 100000) throw UnsupportedError("too-large", "binomial coefficient of " + n.str());
  Natural r = 1;
  for (Natural i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Natural middle_binomial(const Ordinal& k) { return binomial(*k.finite_value(), *k.finite_value() / 2); }

// Pf(G(k)): the subset lattice of a k-set.
Triple antichain_powerset(const Ordinal& k) {
  return exact_triple(two_pow(k), add(k, 1), Ordinal(middle_binomial(k)));
}

// Width of a product of finite chains: its largest rank level (chain products are Sperner).
Ordinal chain_grid_width(const std::vector<Natural>& lengths) {
  std::vector<Natural> poly{1};
  Natural degree = 0;
  for (const auto& n : lengths) degree += n - 1;
  if (degree > 20000) throw UnsupportedError("too-large", "chain product of rank " + degree.str());
  for (const auto& n : lengths) {
    const std::size_t len = static_cast<std::size_t>(n);
    std::vector<Natural> next(poly.size() + len - 1, 0);
    // Multiply by 1 + x + ... + x^(len-1) with a running window sum.
    Natural window = 0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i < poly.size()) window += poly[i];
      if (i >= len) window -= poly[i - len];
      next[i] = window;
    }
    poly = std::move(next);
  }
  return Ordinal(*std::max_element(poly.begin(), poly.end()));
}

// w^(w*a) with a > 0: a power of w whose exponent is a nonzero limit.
bool is_omega_pow_omega_multiple(const Ordinal& a) {
  if (a.terms().size() != 1 || a.terms()[0].coefficient != 1) return false;
  const Ordinal& e = a.terms()[0].exponent;
  return e.is_limit();
}

std::optional<Expr> sim_member(const Ordinal& a) {
  if (a == kOmega) return Expr::ord(kOmega);
  if (a.is_multiplicatively_indecomposable() && a >= omega_pow(kOmega)) return Expr::pf(Expr::words(Expr::ord(a)));
  return std::nullopt;
}

const char* const kSimCondition = "a = w or a >= w^w multiplicatively indecomposable";

// FSim_a becomes Pf(a^<w); FPhi_k for finite k becomes G(k).
Expr expand_families(const Expr& e) {
  if (e.kind() == Kind::sim) {
    if (auto m = sim_member(e.ordinal())) return *m;
    return e;
  }
  if (e.kind() == Kind::phi && e.ordinal().is_finite() && !e.ordinal().is_zero()) {
    return Expr::gamma(static_cast<std::uint64_t>(*e.ordinal().finite_value()));
  }
  if (e.children().empty()) return e;
  std::vector<Expr> kids;
  for (const auto& c : e.children()) kids.push_back(expand_families(c));
  return e.with_children(std::move(kids));
}

void flatten_product(const Expr& e, std::vector<Expr>& out) {
  if (e.kind() == Kind::cart_prod) {
    flatten_product(e.left(), out);
    flatten_product(e.right(), out);
  } else {
    out.push_back(e);
  }
}

Ordinal weak_mot_normal(const Expr& e) {
  Ordinal r;
  switch (e.kind()) {
    case Kind::ord:
      r = e.ordinal();
      break;
    case Kind::cart_prod:
    case Kind::disj_union:
      r = std::max(weak_mot_normal(e.left()), weak_mot_normal(e.right()));
      break;
    case Kind::multisets:
    case Kind::words:
      r = weak_mot_normal(e.child(0));
      break;
    case Kind::pf:
      r = two_pow(weak_mot_normal(e.child(0)));
      break;
    default:
      throw InternalError("weak maximal order type of non-elementary node " + to_string(e));
  }
  if (!r.is_multiplicatively_indecomposable()) {
    throw InternalError("weak maximal order type " + to_string(r) + " of " + to_string(e) + " is not indecomposable");
  }
  return r;
}

class Evaluator {
 public:
  std::vector<std::string> notes;

  void note(const std::string& n) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  }

  Triple eval(const Expr& e) {
    if (is_elementary(e)) {
      note("elementary-normal-form");
      return elementary(normalize_elementary(e).expr);
    }
    Triple t = eval_node(e);
    if (is_omega_elementary(e)) {
      note("omega-elementary-height");
      t.h = Result::exact(kOmega);
    }
    return t;
  }

  // Exact tables for an elementary expression in normal form.
  Triple elementary(const Expr& e) {
    switch (e.kind()) {
      case Kind::ord:
        return exact_triple(e.ordinal(), e.ordinal(), 1);
      case Kind::disj_union: {
        const Triple a = elementary(e.left()), b = elementary(e.right());
        return exact_triple(nat_sum(a.o.value(), b.o.value()), std::max(a.h.value(), b.h.value()),
                            nat_sum(a.w.value(), b.w.value()));
      }
      case Kind::cart_prod: {
        note("elementary-product-width");
        const Triple a = elementary(e.left()), b = elementary(e.right());
        const Ordinal o = nat_prod(a.o.value(), b.o.value());
        return exact_triple(o, hat_nat_sum(a.h.value(), b.h.value()), o);
      }
      case Kind::words: {
        const Triple a = elementary(e.child(0));
        const Ordinal o = omega_pow(omega_pow(pm(a.o.value())));
        return exact_triple(o, hstar(a.h.value()), o);
      }
      case Kind::multisets: {
        const Triple a = elementary(e.child(0));
        const Ordinal o = omega_pow(hat(a.o.value()));
        return exact_triple(o, hstar(a.h.value()), o);
      }
      case Kind::pf: {
        note("powerset-height-from-weak-mot");
        const Triple a = elementary(e.child(0));
        const Ordinal o = two_pow(a.o.value());
        return exact_triple(o, weak_mot_normal(e.child(0)), o);
      }
      default:
        throw InternalError("non-elementary node in elementary evaluation: " + to_string(e));
    }
  }

  Triple pf_bounds(const Triple& a) {
    note("powerset-bounds");
    Triple r;
    r.o = a.o.is_unsupported() ? a.o : guarded([&] {
      const Ordinal lo = add(1, a.o.lower());
      if (a.o.has_upper() && !a.o.finite_multiple()) return Result::interval(lo, two_pow(a.o.upper()));
      return Result::lower_only(lo);
    });
    r.h = a.h.is_unsupported() ? a.h : guarded([&] {
      const Ordinal lo = add(1, a.h.lower());
      if (a.h.is_exact()) return Result::interval(lo, two_pow(a.h.value()), a.h.value().is_successor());
      if (a.h.has_upper() && !a.h.finite_multiple()) return Result::interval(lo, two_pow(a.h.upper()), true);
      return Result::lower_only(lo);
    });
    r.w = a.w.is_unsupported() ? a.w : guarded([&] {
      const Ordinal& k = a.w.lower();
      const Ordinal lo = k.is_finite() ? Ordinal(middle_binomial(k)) : two_pow(k);
      if (r.o.has_upper() && !r.o.finite_multiple()) {
        note("width-capped-by-mot");
        return Result::interval(lo, r.o.upper());
      }
      return Result::lower_only(lo);
    });
    // w <= o also raises the lower bound of o.
    if (!r.o.is_unsupported() && !r.w.is_unsupported() && r.o.lower() < r.w.lower()) {
      r.o = r.o.has_upper() && !r.o.finite_multiple() ? Result::interval(r.w.lower(), r.o.upper())
                                                      : Result::lower_only(r.w.lower());
    }
    return r;
  }

 private:
  Triple eval_node(const Expr& e) {
    switch (e.kind()) {
      case Kind::ord: {
        const Ordinal& a = e.ordinal();
        if (a.is_zero()) return exact_triple(0, 0, 0);
        return exact_triple(a, a, 1);
      }
      case Kind::gamma:
        return exact_triple(e.count(), 1, e.count());
      case Kind::phi: {
        note("phi-family");
        const Ordinal& a = e.ordinal();
        if (a.is_zero()) return uniform(Result::hypothesis_not_met("FPhi_a", "a >= 1"));
        return exact_triple(a, omega_pow(a.leading_exponent()), a);
      }
      case Kind::sim: {
        auto m = sim_member(e.ordinal());
        if (!m) return uniform(Result::hypothesis_not_met("FSim_a", kSimCondition));
        note("sim-family");
        return eval(*m);
      }
      case Kind::sim_ext: {
        auto m = sim_member(e.ordinal());
        if (!m) return uniform(Result::hypothesis_not_met("FSim_a", kSimCondition));
        note("sim-family");
        return eval(Expr::cart_prod(Expr::lex_sum(*m, Expr::ord(1)), Expr::gamma(e.count())));
      }
      case Kind::disj_union: {
        const Triple a = eval(e.left()), b = eval(e.right());
        return {lift(a.o, b.o, nat_sum), lift(a.h, b.h, max_of), lift(a.w, b.w, nat_sum)};
      }
      case Kind::lex_sum: {
        const Triple a = eval(e.left()), b = eval(e.right());
        return {lift(a.o, b.o, add), lift(a.h, b.h, add), lift(a.w, b.w, max_of)};
      }
      case Kind::cart_prod:
        return product(e);
      case Kind::lex_prod:
        return lex_product(e);
      case Kind::words:
        return words(e);
      case Kind::multisets:
        return multisets(e);
      case Kind::multisets_n:
        return multisets_n(e);
      case Kind::pf:
        return powerset(e.child(0));
      case Kind::pf_plus: {
        const Triple a = eval(e.child(0));
        if (exact_is(a.o, 0)) return exact_triple(0, 0, 0);
        note("nonempty-powerset-from-powerset");
        Triple p = eval(eliminate_pf(Expr::pf(e.child(0))));
        return {drop_bottom(p.o), drop_bottom(p.h), p.w};
      }
    }
    throw InternalError("unknown expression kind");
  }

  // Pf(X) = 1 + Pf+(X): remove the empty set from an invariant of Pf(X).
  static Result drop_bottom(const Result& r) {
    if (r.is_unsupported()) return r;
    auto sub = [](const Ordinal& x) { return left_subtract(1, x); };
    switch (r.kind()) {
      case Result::Kind::exact:
        return Result::exact(sub(r.value()));
      case Result::Kind::interval:
        return Result::interval(sub(r.lower()), sub(r.upper()), r.finite_multiple());
      default:
        return Result::lower_only(sub(r.lower()));
    }
  }

  Triple powerset(const Expr& x) {
    if (x.kind() == Kind::gamma) {
      note("powerset-of-antichain");
      return antichain_powerset(x.count());
    }
    if (x.kind() == Kind::phi && !x.ordinal().is_zero()) {
      note("powerset-of-phi-family");
      const InvariantReport r = pf_phi_invariants(x.ordinal());
      return {r.mot, r.height, r.width};
    }
    const Triple a = eval(x);
    if (exact_is(a.o, 0)) return exact_triple(1, 1, 1);
    Triple r = pf_bounds(a);
    if (x.kind() == Kind::sim_ext && sim_member(x.ordinal())) {
      note("extended-sim-powerset-height");
      r.h = guarded([&] { return Result::lower_only(mul(two_pow(x.ordinal()), Ordinal(x.count()))); });
    }
    if (is_omega_elementary(x)) {
      note("omega-elementary-height");
      r.h = Result::exact(kOmega);
    }
    return r;
  }

  Triple lex_product(const Expr& e) {
    const Triple a = eval(e.left()), b = eval(e.right());
    if (exact_is(a.o, 0) || exact_is(b.o, 0)) return exact_triple(0, 0, 0);
    Result o;
    if (exact_finite(a.o) && exact_finite(b.o)) {
      o = Result::exact(mul(a.o.value(), b.o.value()));
    } else if (b.o.is_exact() && b.o.value().is_limit()) {
      o = lift(a.o, b.o, mul);
    } else if (b.o.is_unsupported()) {
      o = b.o;
    } else {
      o = Result::hypothesis_not_met("o(A.B) = o(A)*o(B)", "o(B) to be a limit");
    }
    return {o, lift(a.h, b.h, mul), lift(a.w, b.w, odot)};
  }

  Triple words(const Expr& e) {
    const Triple a = eval(e.child(0));
    if (exact_is(a.o, 0)) return exact_triple(1, 1, 1);
    const Result o = lift(a.o, [](const Ordinal& x) { return omega_pow(omega_pow(pm(x))); });
    Result w;
    if (exact_is(a.o, 1)) {
      w = Result::exact(1);  // one letter up to equivalence: the words form the chain w
    } else if (!a.o.is_unsupported() && a.o.lower() > Ordinal(1)) {
      w = o;
    } else if (a.o.is_unsupported()) {
      w = a.o;
    } else {
      w = Result::hypothesis_not_met("w(A^<w) = o(A^<w)", "o(A) > 1");
    }
    return {o, lift(a.h, hstar), w};
  }

  Triple multisets(const Expr& e) {
    const Triple a = eval(e.child(0));
    if (exact_is(a.o, 0)) return exact_triple(1, 1, 1);
    const Result o = lift(a.o, [](const Ordinal& x) { return omega_pow(hat(x)); });
    Result w;
    if (exact_is(a.o, 1)) {
      w = Result::exact(1);
    } else if (a.o.is_exact() && a.o.value().is_additively_indecomposable() && a.o.value() >= kOmega) {
      w = o;
    } else if (a.o.is_unsupported()) {
      w = a.o;
    } else {
      w = Result::hypothesis_not_met("w(M(A)) = o(M(A))", "o(A) additively indecomposable and >= w");
    }
    return {o, lift(a.h, hstar), w};
  }

  Triple multisets_n(const Expr& e) {
    const std::uint64_t n = e.count();
    if (n == 0) return exact_triple(1, 1, 1);
    if (n == 1) return eval(e.child(0));
    const Triple a = eval(e.child(0));
    const Result none = Result::unsupported("no-rule-for-fixed-size-multisets");
    if (!exact_finite(a.o)) return uniform(none);
    // Equivalence classes of n-multisets are n-multisets of classes.
    note("fixed-size-multisets-count");
    const Natural k = *a.o.value().finite_value();
    const Result o = guarded([&] { return Result::exact(Ordinal(binomial(k + n - 1, n))); });
    return {o, none, none};
  }

  Triple product(const Expr& e) {
    std::vector<Expr> factors;
    flatten_product(e, factors);
    std::vector<Triple> ts;
    for (const auto& f : factors) ts.push_back(eval(f));
    for (const auto& t : ts)
      if (exact_is(t.o, 0)) return exact_triple(0, 0, 0);
    Result o = ts[0].o, h = ts[0].h;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      o = lift(o, ts[i].o, nat_prod);
      h = lift(h, ts[i].h, [](const Ordinal& x, const Ordinal& y) { return hat_nat_sum(x, y); });
    }
    return {o, h, product_width(factors, ts, o)};
  }

  Result product_width(const std::vector<Expr>& factors, const std::vector<Triple>& ts, const Result& o) {
    // A * G(k) is k disjoint copies of A.
    Natural copies = 1;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].kind() == Kind::gamma) {
        copies *= factors[i].count();
      } else if (exact_is(ts[i].o, 1)) {
        // a single point up to equivalence
      } else {
        rest.push_back(i);
      }
    }
    if (rest.size() < factors.size()) {
      note("product-with-antichain");
      Result wr = Result::exact(1);
      if (rest.size() == 1) {
        wr = ts[rest[0]].w;
      } else if (rest.size() > 1) {
        std::vector<Expr> fs;
        std::vector<Triple> sub;
        Result so = ts[rest[0]].o;
        for (std::size_t i : rest) {
          fs.push_back(factors[i]);
          sub.push_back(ts[i]);
          if (i != rest[0]) so = lift(so, ts[i].o, nat_prod);
        }
        wr = product_width(fs, sub, so);
      }
      return lift(wr, [&](const Ordinal& x) { return nat_prod(x, Ordinal(copies)); });
    }

    const bool all_chains = std::all_of(factors.begin(), factors.end(), [](const Expr& f) { return f.kind() == Kind::ord; });
    if (all_chains) {
      const bool all_finite =
          std::all_of(factors.begin(), factors.end(), [](const Expr& f) { return f.ordinal().is_finite(); });
      if (all_finite) {
        note("finite-chain-grid-width");
        std::vector<Natural> lengths;
        for (const auto& f : factors) lengths.push_back(*f.ordinal().finite_value());
        return guarded([&] { return Result::exact(chain_grid_width(lengths)); });
      }
      if (factors.size() == 2) {
        const Ordinal& a = factors[0].ordinal();
        const Ordinal& b = factors[1].ordinal();
        if (a == kOmega || b == kOmega) {
          note("width-of-omega-times-ordinal");
          return Result::exact(a == kOmega ? b : a);
        }
        const Ordinal w2 = mul(kOmega, 2);
        if (a == w2 && b == w2) {
          note("stored-width-fixture");
          return Result::exact(add(w2, kOmega));
        }
      }
    }

    int big = 0;
    for (const auto& t : ts)
      if (t.o.is_exact() && is_omega_pow_omega_multiple(t.o.value())) ++big;
    if (big >= 2) {
      note("product-width-equals-mot");
      return o;
    }

    // w(A * B) >= w(B) * o(A) when w(B) >= w is additively indecomposable.
    std::optional<Ordinal> best;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const Result& wb = ts[i].w;
      if (!wb.is_exact() || wb.value() < kOmega || !wb.value().is_additively_indecomposable()) continue;
      Ordinal others = 1;
      bool known = true;
      for (std::size_t j = 0; j < ts.size(); ++j) {
        if (j == i) continue;
        if (ts[j].o.is_unsupported()) {
          known = false;
          break;
        }
        others = nat_prod(others, ts[j].o.lower());
      }
      if (!known) continue;
      const Ordinal lb = mul(wb.value(), others);
      if (!best || *best < lb) best = lb;
    }
    if (best) {
      note("product-width-lower-bound");
      if (o.has_upper() && !o.finite_multiple()) return Result::interval(*best, o.upper());
      return Result::lower_only(*best);
    }
    return Result::unsupported("width-of-product-non-functional",
                               "w(A*B) is not a function of the invariants of A and B");
  }
};

void check_consistency(const InvariantReport& r, const Expr& e) {
  if (!r.fully_exact()) return;
  const Ordinal& o = r.mot.value();
  const Ordinal& h = r.height.value();
  const Ordinal& w = r.width.value();
  if (!(o <= nat_prod(h, w)) || !(h <= o) || !(w <= o)) {
    throw InternalError("inconsistent invariants for " + to_string(e) + ": o=" + to_string(o) + " h=" +
                        to_string(h) + " w=" + to_string(w));
  }
}

InvariantReport make_report(const Triple& t, std::vector<std::string> notes) {
  return InvariantReport{t.o, t.h, t.w, std::nullopt, std::move(notes)};
}

Expr prepare(const Expr& e, Evaluator& ev) {
  const Expr expanded = expand_families(e);
  const Expr eliminated = eliminate_pf(expanded);
  if (eliminated != expanded) ev.note("powerset-elimination");
  return eliminated;
}

nlohmann::json result_json(const InvariantResult& r) {
  nlohmann::json j;
  switch (r.kind()) {
    case InvariantResult::Kind::exact:
      j = {{"kind", "exact"}, {"value", to_string(r.value())}};
      break;
    case InvariantResult::Kind::interval:
      j = {{"kind", "interval"}, {"lower", to_string(r.lower())}, {"upper", to_string(r.upper())}};
      if (r.finite_multiple()) j["upper_modifier"] = "finite-multiple";
      break;
    case InvariantResult::Kind::lower:
      j = {{"kind", "lower"}, {"lower", to_string(r.lower())}};
      break;
    case InvariantResult::Kind::unsupported:
      j = {{"kind", "unsupported"}, {"reason", r.reason()}};
      if (!r.detail().empty()) j["detail"] = r.detail();
      break;
  }
  return j;
}

}  // namespace

InvariantReport invariants(const Expr& e) {
  Evaluator ev;
  const Expr x = prepare(e, ev);
  InvariantReport r = make_report(ev.eval(x), {});
  if (is_elementary(x)) r.weak_mot = weak_mot(x);
  r.notes = std::move(ev.notes);
  check_consistency(r, e);
  return r;
}

Ordinal weak_mot(const Expr& e) {
  if (!is_elementary(e)) throw DomainError("weak maximal order type needs an elementary expression, got " + to_string(e));
  return weak_mot_normal(normalize_elementary(e).expr);
}

InvariantReport pf_bounds(const Expr& e) {
  Evaluator ev;
  const Expr x = prepare(e, ev);
  const Triple t = ev.pf_bounds(ev.eval(x));
  return make_report(t, std::move(ev.notes));
}

InvariantReport pf_bounds(const Ordinal& o, const Ordinal& h, const Ordinal& w) {
  Evaluator ev;
  const Triple t = ev.pf_bounds(exact_triple(o, h, w));
  return make_report(t, std::move(ev.notes));
}

InvariantReport phi_invariants(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("FPhi_a needs a >= 1");
  return make_report(exact_triple(a, omega_pow(a.leading_exponent()), a), {"phi-family"});
}

InvariantReport pf_phi_invariants(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("FPhi_a needs a >= 1");
  if (a.is_finite()) return make_report(antichain_powerset(a), {"powerset-of-antichain"});
  Evaluator ev;
  Triple t = ev.pf_bounds(exact_triple(a, omega_pow(a.leading_exponent()), a));
  const Ordinal top = two_pow(a);
  t.o = Result::exact(top);
  t.w = Result::exact(top);
  auto notes = std::move(ev.notes);
  notes.insert(notes.begin(), "powerset-of-phi-family");
  return make_report(t, std::move(notes));
}

SimReport sim_invariants(const Ordinal& a, std::optional<std::uint64_t> ext_m) {
  if (!sim_member(a)) throw HypothesisError("FSim_a", kSimCondition);
  const Expr member = ext_m ? Expr::sim_ext(a, *ext_m) : Expr::sim(a);
  return SimReport{invariants(member), invariants(Expr::pf(member))};
}

std::string report_to_json(const InvariantReport& r) {
  nlohmann::json j = {{"mot", result_json(r.mot)},
                      {"height", result_json(r.height)},
                      {"width", result_json(r.width)},
                      {"notes", r.notes}};
  if (r.weak_mot) j["weak_mot"] = to_string(*r.weak_mot);
  return j.dump();
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "o  " << to_string(r.mot) << "\n";
  os << "h  " << to_string(r.height) << "\n";
  os << "w  " << to_string(r.width) << "\n";
  if (r.weak_mot) os << "weak o  " << to_string(*r.weak_mot) << "\n";
  if (!r.notes.empty()) {
    os << "rules ";
    for (std::size_t i = 0; i < r.notes.size(); ++i) os << (i ? ", " : "") << r.notes[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace wqo
