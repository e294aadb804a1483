#include "wqo/oracle.hpp"

#include "wqo/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace wqo {

// Builds relations that are transitive by construction, so no closure pass is needed.
class PosetBuilder {
 public:
  static FinitePoset from(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    FinitePoset p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) p.set(i, j);
    return p;
  }
};

FinitePoset::FinitePoset(std::size_t n) : n_(n), rel_(n * n, 0) {
  for (std::size_t i = 0; i < n; ++i) set(i, i);
}

FinitePoset FinitePoset::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  FinitePoset p(n);
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n) throw DomainError("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    p.set(i, j);
  }
  p.close();
  return p;
}

FinitePoset FinitePoset::chain(std::size_t n) {
  return PosetBuilder::from(n, [](std::size_t i, std::size_t j) { return i <= j; });
}

FinitePoset FinitePoset::antichain(std::size_t n) { return FinitePoset(n); }

void FinitePoset::close() {
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      if (leq(i, k))
        for (std::size_t j = 0; j < n_; ++j)
          if (leq(k, j)) set(i, j);
}

void FinitePoset::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!leq(i, i)) throw DomainError("relation is not reflexive at " + std::to_string(i));
    for (std::size_t k = 0; k < n_; ++k) {
      if (!leq(i, k)) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (leq(k, j) && !leq(i, j)) throw DomainError("relation is not transitive");
    }
  }
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::size_t finite_ordinal(const Ordinal& a) {
  const auto v = a.finite_value();
  if (!v) throw DomainError("the oracle needs a finite ordinal, got " + to_string(a));
  return *v > kSaturated ? kSaturated : static_cast<std::size_t>(*v);
}

// Number of multisets of size k over n elements, saturating.
std::size_t multichoose(std::size_t n, std::size_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  // C(n + k - 1, k) built incrementally; each prefix is an integer.
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n + i - 1;
    const std::size_t g = std::gcd(r, i);
    const std::size_t r2 = r / g, i2 = i / g;
    const std::size_t num2 = num / i2;  // i2 divides num * r2 and gcd(r2, i2) = 1
    r = sat_mul(r2, num2);
    if (r == kSaturated) return r;
  }
  return r;
}

std::size_t need_cap(const std::optional<std::size_t>& cap, const Expr& e) {
  if (!cap) throw DomainError("the oracle needs a word length cap for " + to_string(e));
  return *cap;
}

void guard(std::size_t n, const Expr& e) {
  if (n > kOracleMaxElements)
    throw TooLargeError(to_string(e) + " has more than " + std::to_string(kOracleMaxElements) + " elements");
}

using Seq = std::vector<std::size_t>;

// Subword embedding: greedy leftmost matching is optimal.
bool word_leq(const FinitePoset& a, const Seq& u, const Seq& v) {
  std::size_t j = 0;
  for (std::size_t x : u) {
    while (j < v.size() && !a.leq(x, v[j])) ++j;
    if (j == v.size()) return false;
    ++j;
  }
  return true;
}

// Multiset embedding: an injection u -> v with x <= f(x) (bipartite matching).
bool multiset_leq(const FinitePoset& a, const Seq& u, const Seq& v) {
  if (u.size() > v.size()) return false;
  std::vector<std::ptrdiff_t> owner(v.size(), -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (seen[j] || !a.leq(u[i], v[j])) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]))) {
        owner[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    seen.assign(v.size(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

void all_words(std::size_t n, std::size_t max_len, std::vector<Seq>& out) {
  out.push_back({});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        Seq w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    begin = end;
  }
}

// Nondecreasing sequences of length in [min_len, max_len].
void all_multisets(std::size_t n, std::size_t min_len, std::size_t max_len, std::vector<Seq>& out) {
  Seq cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() >= min_len) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (std::size_t x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
}

void guard_size(std::size_t n) {
  if (n > kOracleMaxElements)
    throw TooLargeError("poset with " + std::to_string(n) + " elements exceeds the limit of " +
                        std::to_string(kOracleMaxElements));
}

FinitePoset sum_of(const FinitePoset& a, const FinitePoset& b, bool lex) {
  const std::size_t na = a.size();
  guard_size(sat_add(na, b.size()));
  return PosetBuilder::from(na + b.size(), [&](std::size_t i, std::size_t j) {
    if (i < na && j < na) return a.leq(i, j);
    if (i >= na && j >= na) return b.leq(i - na, j - na);
    return lex && i < na;
  });
}

// Element (x, y) is x + |a| * y.
FinitePoset product_of(const FinitePoset& a, const FinitePoset& b, bool lex) {
  const std::size_t na = a.size();
  guard_size(sat_mul(na, b.size()));
  return PosetBuilder::from(na * b.size(), [&](std::size_t i, std::size_t j) {
    const std::size_t x = i % na, y = i / na, x2 = j % na, y2 = j / na;
    if (!b.leq(y, y2)) return false;
    if (lex && !b.leq(y2, y)) return true;
    return a.leq(x, x2);
  });
}

FinitePoset build_rec(const Expr& e, const std::optional<std::size_t>& cap) {
  const auto size = build_size(e, cap);
  if (!size) throw DomainError("the oracle needs a finite expression, got " + to_string(e));
  guard(*size, e);
  switch (e.kind()) {
    case Kind::ord:
      return FinitePoset::chain(finite_ordinal(e.ordinal()));
    case Kind::gamma:
      return FinitePoset::antichain(static_cast<std::size_t>(e.count()));
    case Kind::phi:
      return FinitePoset::antichain(finite_ordinal(e.ordinal()));
    case Kind::disj_union:
      return poset_union(build_rec(e.left(), cap), build_rec(e.right(), cap));
    case Kind::lex_sum:
      return poset_lex_sum(build_rec(e.left(), cap), build_rec(e.right(), cap));
    case Kind::cart_prod:
      return poset_product(build_rec(e.left(), cap), build_rec(e.right(), cap));
    case Kind::lex_prod:
      return poset_lex_product(build_rec(e.left(), cap), build_rec(e.right(), cap));
    case Kind::words:
    case Kind::multisets:
    case Kind::multisets_n: {
      const FinitePoset a = build_rec(e.child(0), cap);
      std::vector<Seq> elems;
      if (e.kind() == Kind::words) {
        all_words(a.size(), need_cap(cap, e), elems);
        return PosetBuilder::from(elems.size(), [&](std::size_t i, std::size_t j) { return word_leq(a, elems[i], elems[j]); });
      }
      if (e.kind() == Kind::multisets) {
        all_multisets(a.size(), 0, need_cap(cap, e), elems);
      } else {
        const auto n = static_cast<std::size_t>(e.count());
        all_multisets(a.size(), n, n, elems);
      }
      return PosetBuilder::from(elems.size(), [&](std::size_t i, std::size_t j) { return multiset_leq(a, elems[i], elems[j]); });
    }
    case Kind::pf:
    case Kind::pf_plus:
      return poset_powerset(build_rec(e.child(0), cap), e.kind() == Kind::pf_plus);
    case Kind::sim:
    case Kind::sim_ext:
      break;
  }
  throw DomainError("the oracle needs a finite expression, got " + to_string(e));
}

}  // namespace

FinitePoset poset_union(const FinitePoset& a, const FinitePoset& b) { return sum_of(a, b, false); }
FinitePoset poset_lex_sum(const FinitePoset& a, const FinitePoset& b) { return sum_of(a, b, true); }
FinitePoset poset_product(const FinitePoset& a, const FinitePoset& b) { return product_of(a, b, false); }
FinitePoset poset_lex_product(const FinitePoset& a, const FinitePoset& b) { return product_of(a, b, true); }

FinitePoset poset_powerset(const FinitePoset& a, bool nonempty) {
  const std::size_t n = a.size();
  if (n >= 63) guard_size(kSaturated);
  const std::uint64_t first = nonempty ? 1 : 0;
  const std::size_t count = static_cast<std::size_t>((std::uint64_t{1} << n) - first);
  guard_size(count);
  std::vector<std::uint64_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.leq(i, j)) up[i] |= std::uint64_t{1} << j;
  return PosetBuilder::from(count, [&](std::size_t i, std::size_t j) {
    const std::uint64_t s = i + first, t = j + first;
    for (std::size_t x = 0; x < n; ++x)
      if ((s >> x & 1) && (up[x] & t) == 0) return false;
    return true;
  });
}

std::optional<std::size_t> build_size(const Expr& e, std::optional<std::size_t> cap) {
  switch (e.kind()) {
    case Kind::ord:
    case Kind::phi:
      if (!e.ordinal().is_finite()) return std::nullopt;
      return finite_ordinal(e.ordinal());
    case Kind::gamma:
      return static_cast<std::size_t>(e.count());
    case Kind::disj_union:
    case Kind::lex_sum:
    case Kind::cart_prod:
    case Kind::lex_prod: {
      const auto a = build_size(e.left(), cap), b = build_size(e.right(), cap);
      if (!a || !b) return std::nullopt;
      const bool sum = e.kind() == Kind::disj_union || e.kind() == Kind::lex_sum;
      return sum ? sat_add(*a, *b) : sat_mul(*a, *b);
    }
    case Kind::words:
    case Kind::multisets: {
      const auto a = build_size(e.child(0), cap);
      if (!a || !cap) return std::nullopt;
      std::size_t total = 0, level = 1;
      for (std::size_t len = 0; len <= *cap; ++len) {
        if (e.kind() == Kind::words) {
          total = sat_add(total, level);
          level = sat_mul(level, *a);
        } else {
          total = sat_add(total, multichoose(*a, len));
        }
      }
      return total;
    }
    case Kind::multisets_n: {
      const auto a = build_size(e.child(0), cap);
      if (!a) return std::nullopt;
      return multichoose(*a, static_cast<std::size_t>(e.count()));
    }
    case Kind::pf:
    case Kind::pf_plus: {
      const auto a = build_size(e.child(0), cap);
      if (!a) return std::nullopt;
      if (*a >= 63) return kSaturated;
      return static_cast<std::size_t>((std::uint64_t{1} << *a) - (e.kind() == Kind::pf_plus ? 1 : 0));
    }
    case Kind::sim:
    case Kind::sim_ext:
      return std::nullopt;
  }
  return std::nullopt;
}

FinitePoset build(const Expr& e, std::optional<std::size_t> word_len_cap) { return build_rec(e, word_len_cap); }

FinitePoset quotient(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> cls(n, n), reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    cls[i] = reps.size();
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == n && p.equiv(i, j)) cls[j] = reps.size();
    reps.push_back(i);
  }
  return PosetBuilder::from(reps.size(), [&](std::size_t i, std::size_t j) { return p.leq(reps[i], reps[j]); });
}

std::uint64_t mot_direct(const FinitePoset& p) { return quotient(p).size(); }

std::uint64_t height_direct(const FinitePoset& p) {
  const FinitePoset q = quotient(p);
  const std::size_t n = q.size();
  // Strictly smaller elements have strictly fewer elements below them.
  std::vector<std::size_t> below(n, 0), order(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i] += q.leq(j, i) ? 1 : 0;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::uint64_t> longest(n, 1);
  std::uint64_t best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t y = order[k];
    for (std::size_t m = 0; m < k; ++m)
      if (q.less(order[m], y)) longest[y] = std::max(longest[y], longest[order[m]] + 1);
    best = std::max(best, longest[y]);
  }
  return best;
}

std::uint64_t width_direct(const FinitePoset& p) {
  // Dilworth: minimum chain cover = n - maximum matching of the strict order (Hopcroft-Karp).
  const FinitePoset q = quotient(p);
  const std::size_t n = q.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && q.leq(i, j)) adj[i].push_back(j);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_l(n, kNone), match_r(n, kNone), dist(n);
  auto bfs = [&] {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < n; ++u) {
      dist[u] = match_l[u] == kNone ? 0 : kNone;
      if (dist[u] == 0) queue.push(u);
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj[u]) {
        const std::size_t w = match_r[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      const std::size_t w = match_r[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kNone;
    return false;
  };
  std::size_t matching = 0;
  while (bfs())
    for (std::size_t u = 0; u < n; ++u)
      if (match_l[u] == kNone && dfs(u)) ++matching;
  return n - matching;
}

ResidualRanks residual_ranks(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > kResidualMaxElements)
    throw TooLargeError("residual ranks need at most " + std::to_string(kResidualMaxElements) + " elements");
  std::vector<std::uint32_t> not_above(n, 0), strictly_below(n, 0), incomparable(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t bit = std::uint32_t{1} << y;
      if (!p.leq(x, y)) not_above[x] |= bit;
      if (p.less(y, x)) strictly_below[x] |= bit;
      if (p.incomparable(x, y)) incomparable[x] |= bit;
    }
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  auto rank = [&](const std::vector<std::uint32_t>& residual) {
    std::vector<std::uint8_t> memo(std::size_t{1} << n, 0xFF);
    std::function<std::uint8_t(std::uint32_t)> go = [&](std::uint32_t s) -> std::uint8_t {
      if (s == 0) return 0;
      std::uint8_t& slot = memo[s];
      if (slot != 0xFF) return slot;
      std::uint8_t best = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        const auto x = static_cast<std::size_t>(__builtin_ctz(rest));
        best = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(go(s & residual[x]) + 1));
      }
      return slot = best;
    };
    return static_cast<std::uint64_t>(go(full));
  };
  return {rank(not_above), rank(strictly_below), rank(incomparable)};
}

OracleReport measure(const FinitePoset& p) {
  OracleReport r;
  r.elements = p.size();
  const FinitePoset q = quotient(p);
  r.classes = q.size();
  r.mot = q.size();
  r.height = height_direct(q);
  r.width = width_direct(q);
  const FinitePoset* target = p.size() <= kResidualMaxElements ? &p : q.size() <= kResidualMaxElements ? &q : nullptr;
  if (target) {
    const ResidualRanks res = residual_ranks(*target);
    if (res.mot != r.mot || res.height != r.height || res.width != r.width) {
      throw InternalError("residual ranks (" + std::to_string(res.mot) + ", " + std::to_string(res.height) + ", " +
                          std::to_string(res.width) + ") disagree with direct values (" + std::to_string(r.mot) +
                          ", " + std::to_string(r.height) + ", " + std::to_string(r.width) + ")");
    }
    r.residual_checked = true;
  }
  return r;
}

namespace {

struct Signature {
  std::size_t below, above, level;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FinitePoset& q) {
  const std::size_t n = q.size();
  std::vector<Signature> sig(n, {0, 0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (q.less(j, i)) ++sig[i].below;
      if (q.less(i, j)) ++sig[i].above;
    }
  // Level: length of the longest chain ending at the element.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a].below < sig[b].below; });
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < k; ++m)
      if (q.less(order[m], order[k])) sig[order[k]].level = std::max(sig[order[k]].level, sig[order[m]].level + 1);
  return sig;
}

}  // namespace

bool iso(const FinitePoset& p, const FinitePoset& q) {
  const FinitePoset a = quotient(p), b = quotient(q);
  if (a.size() > kIsoMaxElements || b.size() > kIsoMaxElements)
    throw TooLargeError("isomorphism test needs at most " + std::to_string(kIsoMaxElements) + " classes");
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  const auto sa = signatures(a), sb = signatures(b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> image(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sb[c] != sa[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a.leq(k, i) == b.leq(image[k], c) && a.leq(i, k) == b.leq(c, image[k]);
      if (!ok) continue;
      used[c] = 1;
      image[i] = c;
      if (extend(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return extend(0);
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::match: return "match";
    case CheckStatus::contained: return "contained";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::not_compared: return "not-compared";
  }
  return "";
}

bool CheckReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const CheckEntry& c) { return c.status == CheckStatus::mismatch; });
}

std::size_t CheckReport::exact_matches() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& c) { return c.status == CheckStatus::match; }));
}

CheckReport check_engine(const Expr& e) {
  if (!is_finite_expr(e)) throw DomainError("check needs a finite expression, got " + to_string(e));
  CheckReport r;
  r.oracle = measure(build(e));
  try {
    r.engine = invariants(e);
  } catch (const Error& err) {
    const auto u = InvariantResult::unsupported("engine-error", err.what());
    r.engine.mot = r.engine.height = r.engine.width = u;
  }
  const std::array<std::pair<const char*, std::pair<const InvariantResult*, std::uint64_t>>, 3> rows{{
      {"mot", {&r.engine.mot, r.oracle.mot}},
      {"height", {&r.engine.height, r.oracle.height}},
      {"width", {&r.engine.width, r.oracle.width}},
  }};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [name, row] = rows[i];
    CheckEntry& c = r.entries[i];
    c.invariant = name;
    c.engine = *row.first;
    c.oracle = row.second;
    const Ordinal actual(c.oracle);
    if (c.engine.is_unsupported()) {
      c.status = CheckStatus::not_compared;
    } else if (c.engine.is_exact()) {
      c.status = c.engine.value() == actual ? CheckStatus::match : CheckStatus::mismatch;
    } else {
      c.status = c.engine.contains(actual) ? CheckStatus::contained : CheckStatus::mismatch;
    }
  }
  return r;
}

FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, double density, double glue) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::bernoulli_distribution edge(density), merge(glue);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(i, j);
  for (std::size_t i = 1; i < n; ++i) {
    if (!merge(rng)) continue;
    const std::size_t j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    pairs.emplace_back(i, j);
    pairs.emplace_back(j, i);
  }
  return FinitePoset::from_pairs(n, pairs);
}

namespace {

Expr random_finite_node(std::mt19937_64& rng, int depth) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth == 0 || pick(0, 9) < 3) {
    switch (pick(0, 5)) {
      case 0: return Expr::gamma(static_cast<std::uint64_t>(pick(1, 4)));
      case 1: return Expr::phi(Ordinal(pick(1, 3)));
      case 2: return Expr::ord(Ordinal(pick(0, 1)));
      default: return Expr::ord(Ordinal(pick(1, 5)));
    }
  }
  switch (pick(0, 9)) {
    case 0:
    case 1: return Expr::disj_union(random_finite_node(rng, depth - 1), random_finite_node(rng, depth - 1));
    case 2:
    case 3: return Expr::lex_sum(random_finite_node(rng, depth - 1), random_finite_node(rng, depth - 1));
    case 4: return Expr::cart_prod(random_finite_node(rng, depth - 1), random_finite_node(rng, depth - 1));
    case 5: return Expr::lex_prod(random_finite_node(rng, depth - 1), random_finite_node(rng, depth - 1));
    case 6:
    case 7: return Expr::pf(random_finite_node(rng, depth - 1));
    case 8: return Expr::pf_plus(random_finite_node(rng, depth - 1));
    default: return Expr::multisets_n(random_finite_node(rng, depth - 1), static_cast<std::uint64_t>(pick(0, 3)));
  }
}

}  // namespace

Expr random_finite_expr(std::mt19937_64& rng, std::size_t max_elements) {
  for (;;) {
    Expr e = random_finite_node(rng, 3);
    const auto n = build_size(e);
    if (n && *n <= max_elements) return e;
  }
}

FinitePoset poset_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.byte, {"JSON"}, err.what());
  }
  const auto bad = [](const std::string& what) { return ParseError(0, {"{\"n\": int, \"leq\": [[i, j], ...]}"}, what); };
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned()) throw bad("missing non-negative integer \"n\"");
  const auto n = j["n"].get<std::size_t>();
  if (n > kOracleMaxElements) throw TooLargeError("poset with " + std::to_string(n) + " elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) throw bad("\"leq\" must be an array of pairs");
    for (const auto& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_unsigned() || !pr[1].is_number_unsigned())
        throw bad("\"leq\" entries must be pairs of element indices");
      const auto a = pr[0].get<std::size_t>(), b = pr[1].get<std::size_t>();
      if (a >= n || b >= n) throw bad("element index out of range");
      pairs.emplace_back(a, b);
    }
  }
  return FinitePoset::from_pairs(n, pairs);
}

std::string poset_to_json(const FinitePoset& p) {
  nlohmann::json leq = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) leq.push_back({i, j});
  return nlohmann::json{{"n", p.size()}, {"leq", leq}}.dump();
}

namespace {

nlohmann::json oracle_json(const OracleReport& r) {
  return {{"elements", r.elements}, {"classes", r.classes},   {"mot", r.mot},
          {"height", r.height},     {"width", r.width},       {"residual_checked", r.residual_checked}};
}

}  // namespace

std::string oracle_to_json(const OracleReport& r) { return oracle_json(r).dump(); }

std::string oracle_to_text(const OracleReport& r) {
  std::ostringstream os;
  os << "elements  " << r.elements << "\n"
     << "classes   " << r.classes << "\n"
     << "o  " << r.mot << "\n"
     << "h  " << r.height << "\n"
     << "w  " << r.width << "\n"
     << "residual  " << (r.residual_checked ? "agrees" : "skipped") << "\n";
  return os.str();
}

std::string check_to_json(const CheckReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& c : r.entries)
    entries.push_back({{"invariant", c.invariant},
                       {"engine", to_string(c.engine)},
                       {"oracle", c.oracle},
                       {"status", std::string(status_name(c.status))}});
  return nlohmann::json{{"ok", r.ok()},
                        {"entries", entries},
                        {"oracle", oracle_json(r.oracle)},
                        {"engine", nlohmann::json::parse(report_to_json(r.engine))}}
      .dump();
}

std::string check_to_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.entries) {
    os << c.invariant.front() << "  engine " << to_string(c.engine) << "  oracle " << c.oracle << "  "
       << status_name(c.status) << "\n";
  }
  os << (r.ok() ? "ok" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace wqo
