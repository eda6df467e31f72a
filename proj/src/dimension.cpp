#include "b2/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "b2/bases.hpp"
#include "b2/error.hpp"
#include "b2/factor.hpp"

namespace b2 {

namespace {

std::string trunc_decimal(const mpq_class& x, int digits, bool up) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class y = x * scale;
  mpz_class q;
  if (up) mpz_cdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  else mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  const bool neg = q < 0;
  std::string s = mpz_class(abs(q)).get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
  }
  return (neg ? "-" : "") + s;
}

}  // namespace

std::string RealEnclosure::certified(int digits) const {
  if (exact() && lo.get_den() == 1) return lo.get_num().get_str();
  for (int d = digits; d >= 0; --d) {
    std::string a = trunc_decimal(lo, d, false), b = trunc_decimal(hi, d, false);
    if (a == b) return a;
  }
  return "[" + trunc_decimal(lo, 0, false) + "," + trunc_decimal(hi, 0, true) + "]";
}

std::pair<std::string, std::string> RealEnclosure::outward(int digits) const {
  if (exact() && lo.get_den() == 1) return {lo.get_num().get_str(), lo.get_num().get_str()};
  return {trunc_decimal(lo, digits, false), trunc_decimal(hi, digits, true)};
}

namespace {

struct PState {
  std::vector<unsigned> a, b;
  bool operator<(const PState& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

std::string label(const PState& s) {
  std::string out = "A{";
  for (std::size_t i = 0; i < s.a.size(); ++i) out += (i ? "," : "") + std::to_string(s.a[i]);
  out += "}B{";
  for (std::size_t i = 0; i < s.b.size(); ++i) out += (i ? "," : "") + std::to_string(s.b[i]);
  return out + "}";
}

// Tarjan; components in reverse topological order.
std::vector<std::vector<int>> sccs(const std::vector<std::array<int, 2>>& next, std::vector<int>& comp) {
  const int n = static_cast<int>(next.size());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  comp.assign(n, -1);
  int counter = 0;
  std::function<void(int)> dfs = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (int w : next[v]) {
      if (w < 0) continue;
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> c;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = static_cast<int>(out.size());
        c.push_back(w);
      } while (w != v);
      out.push_back(std::move(c));
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) dfs(v);
  return out;
}

int edges_inside(const std::vector<int>& c, const std::vector<std::array<int, 2>>& next, const std::vector<int>& comp) {
  int e = 0;
  for (int v : c)
    for (int w : next[v])
      if (w >= 0 && comp[w] == comp[v]) ++e;
  return e;
}

}  // namespace

UqAutomaton build_automaton(const EPSeq& alpha) {
  if (!parry_check(alpha)) throw DomainError("not a quasi-greedy expansion: " + alpha.str());
  const unsigned k = static_cast<unsigned>(alpha.pre().size());
  const unsigned w = static_cast<unsigned>(alpha.window());
  auto fold = [&](unsigned t) { return t == w ? k : t; };

  std::vector<PState> states{PState{}};
  std::map<PState, int> ids{{PState{}, 0}};
  std::vector<std::array<int, 2>> next;
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::array<int, 2> row{-1, -1};
    for (int d = 0; d <= 1; ++d) {
      std::set<unsigned> na, nb;
      bool dead = false;
      for (unsigned t : states[i].a) {
        const int x = alpha.at(t);
        if (d > x) dead = true;
        else if (d == x) na.insert(fold(t + 1));
      }
      for (unsigned t : states[i].b) {
        const int x = 1 - alpha.at(t);
        if (d < x) dead = true;
        else if (d == x) nb.insert(fold(t + 1));
      }
      if (dead) continue;
      (d == 0 ? na : nb).insert(0);
      PState s{{na.begin(), na.end()}, {nb.begin(), nb.end()}};
      auto [it, fresh] = ids.emplace(s, static_cast<int>(states.size()));
      if (fresh) states.push_back(s);
      row[d] = it->second;
    }
    next.push_back(row);
  }

  // Good components: several cycles, or one cycle that no pending
  // comparison follows forever.
  std::vector<int> comp;
  auto comps = sccs(next, comp);
  const EPSeq ra = reflect(alpha);
  std::vector<bool> live(states.size(), false);
  std::vector<bool> good_comp(comps.size(), false);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& c = comps[ci];
    const int e = edges_inside(c, next, comp);
    if (e == 0) continue;
    if (e > static_cast<int>(c.size())) {
      good_comp[ci] = true;
      continue;
    }
    // Simple cycle: read its word from c[0].
    const int v0 = c[0];
    std::string y;
    int v = v0;
    do {
      int d = (next[v][0] >= 0 && comp[next[v][0]] == static_cast<int>(ci)) ? 0 : 1;
      y += static_cast<char>('0' + d);
      v = next[v][d];
    } while (v != v0);
    const EPSeq cyc = EPSeq::periodic(Word(y));
    bool ok = true;
    for (unsigned t : states[v0].a)
      if (shift(alpha, t) == cyc) ok = false;
    for (unsigned t : states[v0].b)
      if (shift(ra, t) == cyc) ok = false;
    good_comp[ci] = ok;
  }
  // Reverse topological order: successors are decided first.
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    bool l = good_comp[ci];
    for (int v : comps[ci])
      for (int w : next[v])
        if (w >= 0 && comp[w] != static_cast<int>(ci) && live[w]) l = true;
    for (int v : comps[ci]) live[v] = l;
  }
  if (!live[0]) throw DomainError("empty language for alpha " + alpha.str());

  UqAutomaton out;
  out.alpha = alpha;
  std::vector<int> renum(states.size(), -1);
  for (std::size_t v = 0; v < states.size(); ++v)
    if (live[v]) {
      renum[v] = static_cast<int>(out.next.size());
      out.next.push_back({-1, -1});
      out.labels.push_back(label(states[v]));
    }
  for (std::size_t v = 0; v < states.size(); ++v) {
    if (!live[v]) continue;
    for (int d = 0; d <= 1; ++d)
      if (next[v][d] >= 0 && live[next[v][d]]) out.next[renum[v]][d] = renum[next[v][d]];
  }
  out.start = renum[0];
  return out;
}

UqAutomaton build_automaton(const AlgBase& q, std::size_t depth) { return build_automaton(alpha_seq(q, depth)); }

std::vector<mpz_class> path_counts(const UqAutomaton& a, std::size_t nmax) {
  std::vector<mpz_class> cur(a.size(), 0), nxt(a.size());
  cur[a.start] = 1;
  std::vector<mpz_class> out{1};
  for (std::size_t n = 1; n <= nmax; ++n) {
    std::fill(nxt.begin(), nxt.end(), 0);
    mpz_class total = 0;
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (cur[v] == 0) continue;
      for (int w : a.next[v])
        if (w >= 0) nxt[w] += cur[v];
    }
    for (const auto& x : nxt) total += x;
    std::swap(cur, nxt);
    out.push_back(total);
  }
  return out;
}

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpq_class q() const {
    mpq_class r;
    mpfr_get_q(r.get_mpq_t(), v);
    return r;
  }
};

// Enclosure of log(x) for x in [lo, hi], lo > 0.
RealEnclosure log_enclosure(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
  Mpfr a(prec), b(prec);
  mpfr_set_q(a.v, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_log(a.v, a.v, MPFR_RNDD);
  mpfr_set_q(b.v, hi.get_mpq_t(), MPFR_RNDU);
  mpfr_log(b.v, b.v, MPFR_RNDU);
  mpq_class l = a.q(), h = b.q();
  if (lo == 1) l = 0;
  if (hi == 1) h = 0;
  return {l, h};
}

// Quotient enclosure for x >= 0 and y > 0.
RealEnclosure divide(const RealEnclosure& x, const RealEnclosure& y) {
  if (y.lo <= 0) throw DomainError("internal: divisor enclosure not positive");
  return {x.lo / y.hi, x.hi / y.lo};
}

mpq_class width(const RealEnclosure& e) { return e.hi - e.lo; }

}  // namespace

EntropyInfo entropy(const UqAutomaton& a, std::size_t nmax, const mpq_class& w) {
  EntropyInfo info;
  info.states = a.size();
  std::vector<int> comp;
  auto comps = sccs(a.next, comp);
  std::vector<ZPoly> polys;
  for (const auto& c : comps) {
    if (edges_inside(c, a.next, comp) <= static_cast<int>(c.size())) continue;
    std::map<int, int> idx;
    for (int v : c) idx.emplace(v, static_cast<int>(idx.size()));
    std::vector<std::vector<long>> m(c.size(), std::vector<long>(c.size(), 0));
    for (int v : c)
      for (int u : a.next[v])
        if (u >= 0 && comp[u] == comp[v]) m[idx[v]][idx[u]] += 1;
    polys.push_back(charpoly(m));
  }
  if (polys.empty()) {
    info.zero = true;
    info.charpoly = ZPoly{-1, 1};
    info.lambda_poly = ZPoly{-1, 1};
    info.lambda_lo = info.lambda_hi = 1;
    info.log_lambda = {0, 0};
  } else {
    ZPoly prod{1};
    for (const ZPoly& p : polys) prod *= strip_x(p);
    info.lambda_poly = squarefree_part(prod);
    auto roots = isolate_real_roots(info.lambda_poly, 1, 2);
    if (roots.empty()) throw DomainError("internal: no spectral radius in [1, 2]");
    RootInterval r = roots.back();
    if (!r.exact()) r = refine_root(info.lambda_poly, r, w);
    info.lambda_lo = r.lo;
    info.lambda_hi = r.hi;
    for (const ZPoly& p : polys) {
      const ZPoly sp = squarefree_part(p);
      if (r.exact() ? sign_at(sp, r.lo) == 0 : sign_at(sp, r.lo) * sign_at(sp, r.hi) < 0) {
        info.charpoly = p;
        break;
      }
    }
    mpfr_prec_t prec = 128;
    info.log_lambda = log_enclosure(r.lo, r.hi, prec);
  }
  const auto counts = path_counts(a, nmax);
  for (std::size_t n = 1; n <= nmax; n *= 2) {
    const mpq_class c(counts[n]);
    RealEnclosure l = log_enclosure(c, c, 128);
    info.finite_bounds.push_back({n, {l.lo / n, l.hi / n}});
  }
  return info;
}

EntropyInfo entropy(const AlgBase& q, std::size_t nmax) { return entropy(build_automaton(q), nmax); }

namespace {

RealEnclosure dim_from(const EntropyInfo& h, const AlgBase& q, const mpq_class& tol) {
  if (h.zero) return {0, 0};
  if (q.is_root_of(h.lambda_poly)) {
    const bool inside = h.lambda_lo == h.lambda_hi ? q.cmp(h.lambda_lo) == 0
                                                   : q.cmp(h.lambda_lo) > 0 && q.cmp(h.lambda_hi) < 0;
    if (inside) return {1, 1};
  }
  mpq_class w = tol / 16;
  for (mpfr_prec_t prec = 128;; prec *= 2, w /= 1 << 16) {
    RootInterval r{h.lambda_lo, h.lambda_hi};
    if (!r.exact()) r = refine_root(h.lambda_poly, r, w);
    q.refine(w);
    auto [ql, qh] = q.interval();
    RealEnclosure d = divide(log_enclosure(r.lo, r.hi, prec), log_enclosure(ql, qh, prec));
    if (width(d) <= tol || prec > 8192) return d;
  }
}

}  // namespace

RealEnclosure dim_U(const AlgBase& q, const mpq_class& tol) {
  if (q.cmp(mpq_class(1)) <= 0 || q.cmp(mpq_class(2)) > 0) throw DomainError("base must lie in (1, 2]");
  return dim_from(entropy(q, 1), q, tol);
}

LocalBound b2_local_bound(const AlgBase& q, const mpq_class& delta, std::size_t kmax) {
  if (delta <= 0) throw DomainError("delta must be positive");
  if (q.cmp(mpq_class(1) + delta) <= 0) throw DomainError("q - delta must exceed 1");
  // 3 delta < 2 - q
  if (q.cmp(mpq_class(2) - 3 * delta) >= 0) throw DomainError("delta must be below (2 - q) / 3");
  const FieldElem t = FieldElem::gen(q) + delta;
  const Expansion e = expand_one(t, false, kmax, true);
  EPSeq s;
  bool exact = false;
  if (e.periodic) {
    s = *e.periodic;
    exact = true;
  } else {
    // (a_1..a_K)^inf dominates alpha(t); take the longest quasi-greedy one.
    bool found = false;
    for (std::size_t k = e.digits.size(); k >= 1 && !found; --k) {
      EPSeq cand = EPSeq::periodic(e.digits.substr(0, k));
      if (cand.is_zero_tail()) continue;
      if (parry_check(cand)) {
        s = cand;
        found = true;
      }
    }
    if (!found) throw DomainError("no quasi-greedy truncation found");
  }
  const EntropyInfo h = entropy(build_automaton(s), 1);
  auto [ql, qh] = q.interval();
  RealEnclosure lq = log_enclosure(ql - delta, qh - delta, 128);
  RealEnclosure b = divide(h.log_lambda, lq);
  b.lo *= 2;
  b.hi *= 2;
  return {b, s, exact, h.log_lambda};
}

AlgBase kl_upper_approximant(unsigned bits) {
  if (bits < 4 || bits > 200) throw DomainError("bits must lie in [4, 200]");
  const Word tm = thue_morse(4096);
  mpz_class scale = mpz_class(1) << bits;
  // q_KL lies in (1.7872, 1.7873); binary search on the numerator.
  auto above = [&](const mpz_class& a) {
    const AlgBase r = AlgBase::rational(mpq_class(a, scale));
    for (std::size_t i = 0; i < tm.size(); ++i) {
      const int x = r.alpha_digit(i);
      if (x != tm[i]) return x > tm[i];
    }
    throw UnsupportedBase("comparison with the Thue-Morse prefix undecided");
  };
  mpz_class lo = (mpz_class(17872) * scale) / 10000, hi = (mpz_class(17873) * scale) / 10000 + 1;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (above(mid)) hi = mid;
    else lo = mid;
  }
  return AlgBase::rational(mpq_class(hi, scale));
}

}  // namespace b2
