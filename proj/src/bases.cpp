#include "b2/bases.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

#include "b2/error.hpp"

namespace b2 {

namespace {

void require_base(const AlgBase& q) {
  if (q.cmp(mpq_class(1)) <= 0 || q.cmp(mpq_class(2)) > 0) throw DomainError("base must lie in (1, 2]");
}

}  // namespace

Word alpha_digits(const AlgBase& q, std::size_t n) {
  require_base(q);
  return q.alpha_prefix(n);
}

GreedyDigits beta_digits(const AlgBase& q, std::size_t n) {
  require_base(q);
  Expansion e = expand_one(FieldElem::gen(q), true, n, false);
  return {e.digits, e.finite};
}

EPSeq alpha_seq(const AlgBase& q, std::size_t depth) {
  require_base(q);
  auto s = q.alpha_seq(depth);
  if (!s) throw UnsupportedBase("quasi-greedy expansion not eventually periodic within " + std::to_string(depth) + " digits");
  return *s;
}

bool parry_check(const EPSeq& s) {
  if (s.is_zero_tail()) throw DomainError("sequence must contain infinitely many ones");
  for (std::size_t n = 1; n <= s.window(); ++n)
    if (s.at(n - 1) == 0 && lex_cmp(shift(s, n), s) == Order::GT) return false;
  return true;
}

AlgBase base_from_alpha(const EPSeq& s) {
  if (!parry_check(s)) throw DomainError("sequence is not a quasi-greedy expansion: " + s.str());
  SeriesForm f = series_form(s);
  ZPoly p = strip_x(f.num - f.den);
  p = strip_cyclotomic(p, {static_cast<unsigned>(s.period().size())});
  for (const RootInterval& r : isolate_real_roots(p, 1, 2)) {
    if (r.hi <= 1) continue;
    if (r.exact()) return AlgBase::rational(r.lo);
    return AlgBase(p, r.lo, r.hi);
  }
  throw DomainError("no base in (1, 2] for " + s.str());
}

CountResult count_expansions(const FieldElem& x, const AlgBase& q, std::size_t cap, std::size_t depth) {
  require_base(q);
  if (cap < 1) throw DomainError("cap must be at least 1");
  const FieldElem qq = FieldElem::gen(q);
  const FieldElem top = FieldElem(q, mpq_class(1)) / (qq - mpq_class(1));
  if (x.sign() < 0 || x.cmp(top) > 0) throw DomainError("x lies outside [0, 1/(q-1)]");

  std::vector<FieldElem> nodes{x};
  std::vector<std::vector<std::size_t>> succ(1);
  std::vector<bool> expanded(1, false);
  std::unordered_map<std::string, std::size_t> ids{{x.key(), 0}};
  std::vector<std::size_t> frontier{0};
  bool truncated = false;
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    if (level >= depth) {
      truncated = true;
      break;
    }
    std::vector<std::size_t> next;
    for (std::size_t v : frontier) {
      expanded[v] = true;
      FieldElem qr = qq * nodes[v];
      for (int d = 0; d <= 1; ++d) {
        FieldElem r = d ? qr - mpq_class(1) : qr;
        if (r.sign() < 0 || r.cmp(top) > 0) continue;
        auto [it, fresh] = ids.emplace(r.key(), nodes.size());
        if (fresh) {
          nodes.push_back(r);
          succ.emplace_back();
          expanded.push_back(false);
          next.push_back(it->second);
        }
        succ[v].push_back(it->second);
      }
    }
    frontier = std::move(next);
  }

  // Tarjan SCCs; emitted in reverse topological order.
  const std::size_t n = nodes.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = static_cast<int>(comps.size());
        c.push_back(w);
      } while (w != v);
      comps.push_back(std::move(c));
    }
  };
  dfs(0);

  const mpz_class over = mpz_class(static_cast<unsigned long>(cap)) + 1;
  std::vector<mpz_class> paths(n, 0);
  for (const auto& c : comps) {
    const std::size_t v0 = c[0];
    const bool self = std::find(succ[v0].begin(), succ[v0].end(), v0) != succ[v0].end();
    if (c.size() > 1 || self) {
      for (std::size_t v : c)
        if (succ[v].size() != 1) return {false, over};  // a cycle with an exit
      for (std::size_t v : c) paths[v] = 1;
      continue;
    }
    if (!expanded[v0]) {
      paths[v0] = 1;
      continue;
    }
    for (std::size_t w : succ[v0]) paths[v0] += paths[w];
  }
  const mpz_class k = paths[0];
  if (truncated || k > cap) return {false, k};
  return {true, k};
}

mpq_class parse_rational(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '"') t += c;
  try {
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      mpq_class r(mpz_class(t.substr(0, slash)), mpz_class(t.substr(slash + 1)));
      if (r.get_den() == 0) throw ParseError("zero denominator");
      r.canonicalize();
      return r;
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
      std::string frac = t.substr(dot + 1);
      std::string whole = t.substr(0, dot);
      bool neg = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      mpz_class w(whole), f(frac.empty() ? "0" : frac);
      mpq_class r(neg ? mpz_class(w * scale - f) : mpz_class(w * scale + f), scale);
      r.canonicalize();
      return r;
    }
    return mpq_class(mpz_class(t));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
}

namespace {

std::vector<std::string> split_list(std::string_view body) {
  std::string s(body);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [..] list: " + s);
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

}  // namespace

AlgBase parse_base_spec(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.rfind("alpha:", 0) == 0) return base_from_alpha(EPSeq::parse(t.substr(6)));
  if (t.rfind("poly:", 0) == 0) {
    auto at = t.find('@');
    if (at == std::string::npos) throw ParseError("poly spec needs @[lo,hi]");
    std::vector<mpz_class> coeffs;
    for (const auto& c : split_list(t.substr(5, at - 5))) {
      try {
        coeffs.emplace_back(c);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad coefficient '" + c + "'");
      }
    }
    auto iv = split_list(t.substr(at + 1));
    if (iv.size() != 2) throw ParseError("interval needs two endpoints");
    ZPoly p(coeffs);
    if (p.degree() < 1) throw DomainError("base polynomial must have positive degree");
    AlgBase q(p, parse_rational(iv[0]), parse_rational(iv[1]));
    require_base(q);
    return q;
  }
  throw ParseError("base spec must start with poly: or alpha:");
}

}  // namespace b2
