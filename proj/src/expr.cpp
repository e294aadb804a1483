#include "wqo/expr.hpp"

#include "text_cursor.hpp"
#include "wqo/errors.hpp"

#include <limits>
#include <ostream>
#include <utility>

namespace wqo {

struct Expr::Node {
  Kind kind;
  std::vector<Expr> children;
  Ordinal ordinal;
  std::uint64_t count = 0;
};

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::ord: return "ord";
    case Kind::gamma: return "gamma";
    case Kind::disj_union: return "disj_union";
    case Kind::lex_sum: return "lex_sum";
    case Kind::cart_prod: return "cart_prod";
    case Kind::lex_prod: return "lex_prod";
    case Kind::words: return "words";
    case Kind::multisets: return "multisets";
    case Kind::multisets_n: return "multisets_n";
    case Kind::pf: return "pf";
    case Kind::pf_plus: return "pf_plus";
    case Kind::phi: return "phi";
    case Kind::sim: return "sim";
    case Kind::sim_ext: return "sim_ext";
  }
  return "?";
}

Expr Expr::ord(Ordinal a) { return Expr(std::make_shared<const Node>(Node{Kind::ord, {}, std::move(a), 0})); }

Expr Expr::gamma(std::uint64_t k) {
  if (k == 0) throw DomainError("G(k) requires k >= 1");
  return Expr(std::make_shared<const Node>(Node{Kind::gamma, {}, {}, k}));
}

Expr Expr::disj_union(Expr l, Expr r) {
  return Expr(std::make_shared<const Node>(Node{Kind::disj_union, {std::move(l), std::move(r)}, {}, 0}));
}

Expr Expr::lex_sum(Expr l, Expr r) {
  return Expr(std::make_shared<const Node>(Node{Kind::lex_sum, {std::move(l), std::move(r)}, {}, 0}));
}

Expr Expr::cart_prod(Expr l, Expr r) {
  return Expr(std::make_shared<const Node>(Node{Kind::cart_prod, {std::move(l), std::move(r)}, {}, 0}));
}

Expr Expr::lex_prod(Expr l, Expr r) {
  return Expr(std::make_shared<const Node>(Node{Kind::lex_prod, {std::move(l), std::move(r)}, {}, 0}));
}

Expr Expr::words(Expr e) {
  return Expr(std::make_shared<const Node>(Node{Kind::words, {std::move(e)}, {}, 0}));
}

Expr Expr::multisets(Expr e) {
  return Expr(std::make_shared<const Node>(Node{Kind::multisets, {std::move(e)}, {}, 0}));
}

Expr Expr::multisets_n(Expr e, std::uint64_t n) {
  return Expr(std::make_shared<const Node>(Node{Kind::multisets_n, {std::move(e)}, {}, n}));
}

Expr Expr::pf(Expr e) { return Expr(std::make_shared<const Node>(Node{Kind::pf, {std::move(e)}, {}, 0})); }

Expr Expr::pf_plus(Expr e) {
  return Expr(std::make_shared<const Node>(Node{Kind::pf_plus, {std::move(e)}, {}, 0}));
}

Expr Expr::phi(Ordinal a) { return Expr(std::make_shared<const Node>(Node{Kind::phi, {}, std::move(a), 0})); }

Expr Expr::sim(Ordinal a) { return Expr(std::make_shared<const Node>(Node{Kind::sim, {}, std::move(a), 0})); }

Expr Expr::sim_ext(Ordinal a, std::uint64_t m) {
  return Expr(std::make_shared<const Node>(Node{Kind::sim_ext, {}, std::move(a), m}));
}

Expr Expr::with_children(std::vector<Expr> children) const {
  if (children.size() != node_->children.size()) throw DomainError("arity mismatch in with_children");
  return Expr(std::make_shared<const Node>(Node{node_->kind, std::move(children), node_->ordinal, node_->count}));
}

Kind Expr::kind() const noexcept { return node_->kind; }

std::span<const Expr> Expr::children() const noexcept { return node_->children; }

const Expr& Expr::child(std::size_t i) const { return node_->children.at(i); }

const Ordinal& Expr::ordinal() const { return node_->ordinal; }

std::uint64_t Expr::count() const { return node_->count; }

bool Expr::is_binary() const noexcept { return node_->children.size() == 2; }

std::size_t Expr::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.ordinal() <=> b.ordinal(); c != 0) return c;
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  const auto xs = a.children();
  const auto ys = b.children();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (auto c = xs[i] <=> ys[i]; c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::uint64_t to_count(const Natural& n, detail::TextCursor& in) {
  if (n > std::numeric_limits<std::uint64_t>::max()) in.fail({"smaller natural number"}, "count too large");
  return static_cast<std::uint64_t>(n);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : in_(text) {}

  Expr parse() {
    Expr e = expr();
    if (!in_.at_end()) in_.fail({"'++'", "'|'", "'*'", "'.'", "end of input"}, "trailing input");
    return e;
  }

 private:
  Expr expr() {
    Expr e = alternatives();
    while (in_.accept("++") || in_.accept("+")) e = Expr::lex_sum(std::move(e), alternatives());
    return e;
  }

  Expr alternatives() {
    Expr e = term();
    while (in_.accept("|")) e = Expr::disj_union(std::move(e), term());
    return e;
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (in_.accept("*")) {
        e = Expr::cart_prod(std::move(e), factor());
      } else if (in_.accept(".")) {
        e = Expr::lex_prod(std::move(e), factor());
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    Expr e = base();
    if (in_.accept("^<w")) e = Expr::words(std::move(e));
    return e;
  }

  Expr base() {
    if (in_.accept("o(")) {
      Ordinal a = detail::read_ordinal(in_);
      in_.expect(")");
      return Expr::ord(std::move(a));
    }
    if (in_.accept("G(")) {
      std::uint64_t k = to_count(in_.natural(), in_);
      if (k == 0) in_.fail({"positive natural number"}, "G(0) is not an antichain size");
      in_.expect(")");
      return Expr::gamma(k);
    }
    if (in_.accept("Pf+(")) return unary(Expr::pf_plus);
    if (in_.accept("Pf(")) return unary(Expr::pf);
    if (in_.accept("Mn(")) {
      Expr e = expr();
      in_.expect(",");
      std::uint64_t n = to_count(in_.natural(), in_);
      in_.expect(")");
      return Expr::multisets_n(std::move(e), n);
    }
    if (in_.accept("M(")) return unary(Expr::multisets);
    if (in_.accept("Phi(")) return ordinal_arg(Expr::phi);
    if (in_.accept("SimExt(")) {
      Ordinal a = detail::read_ordinal(in_);
      in_.expect(",");
      std::uint64_t m = to_count(in_.natural(), in_);
      in_.expect(")");
      return Expr::sim_ext(std::move(a), m);
    }
    if (in_.accept("Sim(")) return ordinal_arg(Expr::sim);
    if (in_.accept("(")) {
      Expr e = expr();
      in_.expect(")");
      return e;
    }
    if (in_.peek_digit()) return Expr::ord(Ordinal(in_.natural()));
    if (in_.peek() == 'w') return Expr::ord(bare_omega_term());
    in_.fail({"'o('", "'G('", "'Pf('", "'M('", "'Mn('", "'Phi('", "'Sim('", "'SimExt('", "'('",
              "natural number", "'w'"},
             "unexpected input");
  }

  // 'w' ['^' atom], without a coefficient: '*' after a bare literal is a product.
  Ordinal bare_omega_term() {
    in_.expect("w");
    if (in_.peek() == '^' && in_.peek_raw(1) != '<') {
      in_.expect("^");
      if (in_.peek_digit()) return omega_pow(Ordinal(in_.natural()));
      if (in_.accept("w")) return omega_pow(Ordinal::omega());
      in_.expect("(");
      Ordinal e = detail::read_ordinal(in_);
      in_.expect(")");
      return omega_pow(e);
    }
    return Ordinal::omega();
  }

  Expr unary(Expr (*make)(Expr)) {
    Expr e = expr();
    in_.expect(")");
    return make(std::move(e));
  }

  Expr ordinal_arg(Expr (*make)(Ordinal)) {
    Ordinal a = detail::read_ordinal(in_);
    in_.expect(")");
    return make(std::move(a));
  }

  detail::TextCursor in_;
};

// Printing precedence: larger binds tighter.
int precedence(Kind k) {
  switch (k) {
    case Kind::lex_sum: return 1;
    case Kind::disj_union: return 2;
    case Kind::cart_prod:
    case Kind::lex_prod: return 3;
    case Kind::words: return 4;
    default: return 5;
  }
}

void write(std::string& out, const Expr& e);

void write_operand(std::string& out, const Expr& e, bool parenthesize) {
  if (parenthesize) out += '(';
  write(out, e);
  if (parenthesize) out += ')';
}

void write(std::string& out, const Expr& e) {
  const int p = precedence(e.kind());
  auto binary = [&](std::string_view op) {
    write_operand(out, e.left(), precedence(e.left().kind()) < p);
    out += op;
    write_operand(out, e.right(), precedence(e.right().kind()) <= p);
  };
  switch (e.kind()) {
    case Kind::ord:
      out += "o(" + to_string(e.ordinal()) + ")";
      return;
    case Kind::gamma:
      out += "G(" + std::to_string(e.count()) + ")";
      return;
    case Kind::disj_union: binary("|"); return;
    case Kind::lex_sum: binary("++"); return;
    case Kind::cart_prod: binary("*"); return;
    case Kind::lex_prod: binary("."); return;
    case Kind::words:
      write_operand(out, e.child(0), precedence(e.child(0).kind()) <= p);
      out += "^<w";
      return;
    case Kind::multisets:
      out += "M(";
      write(out, e.child(0));
      out += ")";
      return;
    case Kind::multisets_n:
      out += "Mn(";
      write(out, e.child(0));
      out += "," + std::to_string(e.count()) + ")";
      return;
    case Kind::pf:
      out += "Pf(";
      write(out, e.child(0));
      out += ")";
      return;
    case Kind::pf_plus:
      out += "Pf+(";
      write(out, e.child(0));
      out += ")";
      return;
    case Kind::phi:
      out += "Phi(" + to_string(e.ordinal()) + ")";
      return;
    case Kind::sim:
      out += "Sim(" + to_string(e.ordinal()) + ")";
      return;
    case Kind::sim_ext:
      out += "SimExt(" + to_string(e.ordinal()) + "," + std::to_string(e.count()) + ")";
      return;
  }
}

bool elementary_leaf(const Ordinal& a) {
  return a.is_multiplicatively_indecomposable() && a >= omega_pow(Ordinal::omega());
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  write(out, e);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

bool is_elementary(const Expr& e) {
  switch (e.kind()) {
    case Kind::ord: return elementary_leaf(e.ordinal());
    case Kind::disj_union:
    case Kind::cart_prod: return is_elementary(e.left()) && is_elementary(e.right());
    case Kind::words:
    case Kind::multisets:
    case Kind::pf: return is_elementary(e.child(0));
    default: return false;
  }
}

bool is_omega_elementary(const Expr& e) {
  switch (e.kind()) {
    case Kind::ord: return e.ordinal() == Ordinal::omega();
    case Kind::disj_union:
    case Kind::cart_prod: return is_omega_elementary(e.left()) && is_omega_elementary(e.right());
    case Kind::words:
    case Kind::multisets:
    case Kind::pf: return is_omega_elementary(e.child(0));
    default: return false;
  }
}

bool is_finite_expr(const Expr& e, bool allow_bounded_words) {
  switch (e.kind()) {
    case Kind::ord:
    case Kind::phi: return e.ordinal().is_finite();
    case Kind::gamma: return true;
    case Kind::disj_union:
    case Kind::lex_sum:
    case Kind::cart_prod:
    case Kind::lex_prod:
      return is_finite_expr(e.left(), allow_bounded_words) && is_finite_expr(e.right(), allow_bounded_words);
    case Kind::words:
    case Kind::multisets: return allow_bounded_words && is_finite_expr(e.child(0), allow_bounded_words);
    case Kind::multisets_n:
    case Kind::pf:
    case Kind::pf_plus: return is_finite_expr(e.child(0), allow_bounded_words);
    case Kind::sim:
    case Kind::sim_ext: return false;
  }
  return false;
}

}  // namespace wqo
