#include "b2/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "b2/error.hpp"

namespace b2 {

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  return ZPoly(std::move(r));
}

ZPoly ZPoly::operator*(const mpz_class& k) const {
  std::vector<mpz_class> r = c_;
  for (auto& v : r) v *= k;
  return ZPoly(std::move(r));
}

ZPoly ZPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> r(k, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return ZPoly(std::move(r));
}

std::string ZPoly::json() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += c_[i].get_str();
  }
  return s + "]";
}

std::pair<ZPoly, ZPoly> divmod_unit(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero() || (b.lc() != 1 && b.lc() != -1)) throw DomainError("divmod_unit needs a unit leading coefficient");
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ZPoly(), a};
  std::vector<mpz_class> q(a.degree() - db + 1, 0);
  const bool neg = b.lc() == -1;
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpz_class t = neg ? mpz_class(-r[i]) : r[i];
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  r.resize(db);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = ZPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.lc().get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), b.lc().get_mpz_t());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (quotient) *quotient = ZPoly(std::move(q));
  return true;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_exact_div(a, b, &q)) throw DomainError("polynomial division is not exact");
  return q;
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<mpz_class> r = p.coeffs();
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(r));
}

ZPoly derivative(const ZPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<mpz_class> r(p.degree());
  for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p.coeffs()[i] * i;
  return ZPoly(std::move(r));
}

namespace {

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  const mpz_class& l = b.lc();
  for (int i = a.degree(); i >= db; --i) {
    mpz_class t = r[i];
    for (auto& v : r) v *= l;
    if (t != 0)
      for (int j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    r.pop_back();
    // Keep the remainder small by removing content as we go.
    ZPoly tmp(r);
    mpz_class g = content(tmp);
    if (g > 1)
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return ZPoly(std::move(r));
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  ZPoly g = gcd(p, derivative(p));
  if (g.degree() == 0) return primitive_part(p);
  return primitive_part(exact_div(primitive_part(p), g));
}

std::vector<ZPoly> squarefree_decomposition(const ZPoly& p0) {
  ZPoly p = primitive_part(p0);
  std::vector<ZPoly> out;
  if (p.degree() <= 0) return out;
  ZPoly a = gcd(p, derivative(p));
  ZPoly b = exact_div(p, a);
  ZPoly c = exact_div(derivative(p), a);
  ZPoly d = c - derivative(b);
  while (b.degree() > 0) {
    ZPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

ZPoly cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  ZPoly r = ZPoly::monomial(1, n) - ZPoly{1};
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) r = exact_div(r, cyclotomic(d));
  return r;
}

ZPoly strip_x(const ZPoly& p, std::size_t* count) {
  std::size_t k = 0;
  while (k < p.coeffs().size() && p.coeffs()[k] == 0) ++k;
  if (count) *count = p.is_zero() ? 0 : k;
  if (p.is_zero() || k == 0) return p;
  return ZPoly(std::vector<mpz_class>(p.coeffs().begin() + k, p.coeffs().end()));
}

ZPoly strip_factor(const ZPoly& p, const ZPoly& f, std::size_t* count) {
  std::size_t k = 0;
  ZPoly cur = p, q;
  while (!cur.is_zero() && cur.degree() >= f.degree() && try_exact_div(cur, f, &q)) {
    cur = std::move(q);
    ++k;
  }
  if (count) *count = k;
  return cur;
}

ZPoly strip_cyclotomic(const ZPoly& p, const std::vector<unsigned>& periods) {
  std::vector<unsigned> divs;
  for (unsigned n : periods)
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  ZPoly r = p;
  for (unsigned d : divs) r = strip_factor(r, cyclotomic(d));
  return r;
}

ZPoly to_monic(const ZPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no monic form");
  if (p.lc() == 1) return p;
  if (p.lc() == -1) return -p;
  throw DomainError("polynomial is not monic up to sign: " + p.json());
}

mpz_class eval_homog(const ZPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.is_zero()) return 0;
  mpz_class v = p.lc(), dp = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dp *= den;
    v *= num;
    mpz_addmul(v.get_mpz_t(), p.coeffs()[i].get_mpz_t(), dp.get_mpz_t());
  }
  return v;
}

mpq_class eval(const ZPoly& p, const mpq_class& x) {
  if (p.is_zero()) return 0;
  mpz_class v = eval_homog(p, x.get_num(), x.get_den());
  mpz_class d;
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), p.degree());
  mpq_class r(v, d);
  r.canonicalize();
  return r;
}

int sign_at(const ZPoly& p, const mpq_class& x) { return sgn(eval_homog(p, x.get_num(), x.get_den())); }

std::pair<mpq_class, mpq_class> eval_range(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (lo < 0 || hi < lo) throw DomainError("eval_range needs 0 <= lo <= hi");
  if (p.is_zero()) return {0, 0};
  std::vector<mpz_class> pos(p.coeffs().size()), neg(p.coeffs().size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const mpz_class& c = p.coeffs()[i];
    if (c > 0) pos[i] = c;
    else neg[i] = -c;
  }
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), lo.get_den_mpz_t(), hi.get_den_mpz_t());
  const mpz_class ln = lo.get_num() * (den / lo.get_den());
  const mpz_class hn = hi.get_num() * (den / hi.get_den());
  ZPoly pp(pos), pn(neg);
  auto h = [&](const ZPoly& q, const mpz_class& x) {
    // den^deg(p) * q(x/den), using deg(p) for both halves
    mpz_class v = eval_homog(q, x, den);
    mpz_class extra;
    mpz_pow_ui(extra.get_mpz_t(), den.get_mpz_t(), p.degree() - std::max(q.degree(), 0));
    return q.is_zero() ? mpz_class(0) : mpz_class(v * extra);
  };
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), p.degree());
  mpq_class a(h(pp, ln) - h(pn, hn), scale), b(h(pp, hn) - h(pn, ln), scale);
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

std::vector<mpq_class> taylor_shift(const std::vector<mpq_class>& p, const mpq_class& a) {
  std::vector<mpq_class> c = p;
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += a * c[j + 1];
  return c;
}

namespace {

void shift_int(std::vector<mpz_class>& c, const mpz_class& a) {
  const int n = static_cast<int>(c.size()) - 1;
  if (a == 0) return;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) mpz_addmul(c[j].get_mpz_t(), a.get_mpz_t(), c[j + 1].get_mpz_t());
}

void shift_one(std::vector<mpz_class>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
}

}  // namespace

int descartes_bound(const ZPoly& p, const mpq_class& a, const mpq_class& b) {
  if (p.is_zero()) throw DomainError("descartes_bound of zero polynomial");
  if (!(a < b)) return 0;
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const mpz_class A = a.get_num() * (den / a.get_den());
  const mpz_class W = b.get_num() * (den / b.get_den()) - A;
  const int d = p.degree();
  // R(z) = den^d p(z / den)
  std::vector<mpz_class> c(d + 1);
  mpz_class dp = 1;
  for (int i = d; i >= 0; --i) {
    c[i] = p.coeffs()[i] * dp;
    dp *= den;
  }
  shift_int(c, A);
  mpz_class wp = 1;
  for (int i = 0; i <= d; ++i) {
    c[i] *= wp;
    wp *= W;
  }
  std::reverse(c.begin(), c.end());
  shift_one(c);
  int changes = 0, last = 0;
  for (const auto& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<RootInterval> isolate_real_roots(const ZPoly& p, const mpq_class& a, const mpq_class& b) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (b < a || p.degree() == 0) return out;
  const ZPoly s = squarefree_part(p);
  if (sign_at(s, a) == 0) out.push_back({a, a});
  if (a == b) return out;
  std::function<void(const mpq_class&, const mpq_class&)> rec = [&](const mpq_class& lo, const mpq_class& hi) {
    int v = descartes_bound(s, lo, hi);
    if (v == 0) return;
    if (v == 1) {
      int sl = sign_at(s, lo), sh = sign_at(s, hi);
      if (sl != 0 && sh != 0) {
        out.push_back({lo, hi});
        return;
      }
    }
    mpq_class mid = (lo + hi) / 2;
    rec(lo, mid);
    if (sign_at(s, mid) == 0) out.push_back({mid, mid});
    rec(mid, hi);
  };
  rec(a, b);
  if (sign_at(s, b) == 0) out.push_back({b, b});
  return out;
}

RootInterval refine_root(const ZPoly& p, RootInterval r, const mpq_class& width) {
  if (r.exact()) return r;
  int sl = sign_at(p, r.lo);
  while (r.hi - r.lo > width) {
    mpq_class mid = (r.lo + r.hi) / 2;
    int sm = sign_at(p, mid);
    if (sm == 0) return {mid, mid};
    if (sm == sl) r.lo = mid;
    else r.hi = mid;
  }
  return r;
}

mpq_class root_bound(const ZPoly& p) {
  if (p.degree() <= 0) return 1;
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class v(abs(p.coeffs()[i]), abs(p.lc()));
    v.canonicalize();
    if (v > m) m = v;
  }
  return m + 1;
}

}  // namespace b2
