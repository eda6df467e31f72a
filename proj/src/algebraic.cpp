#include "b2/algebraic.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "b2/error.hpp"
#include "b2/factor.hpp"

namespace b2 {

struct AlgBase::Impl {
  ZPoly m;
  int sign_lo = 0;  // sign of m at lo; hi has the opposite sign
  std::mutex mu;
  mpq_class lo, hi;

  std::mutex alpha_mu;
  std::vector<unsigned char> digits;
  ZPoly rem_num{1};
  mpz_class rem_den = 1;
  std::unordered_map<std::string, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> period;  // start, length
};

namespace {

// Factors of a primitive polynomial over Z, via the monic transform
// g(y) = a^(d-1) f(y / a).
std::vector<ZPoly> irreducible_factors(const ZPoly& f) {
  const mpz_class a = f.lc();
  const int d = f.degree();
  if (a == 1) {
    std::vector<ZPoly> out;
    for (auto& fac : factor_monic(f)) out.push_back(fac.poly);
    return out;
  }
  std::vector<mpz_class> g(d + 1);
  mpz_class ap = 1;
  for (int i = d; i >= 0; --i) {
    // coefficient of y^i: f_i a^(d-1-i)
    if (i == d) g[i] = 1;
    else {
      g[i] = f.coeffs()[i] * ap;
      ap *= a;
    }
  }
  std::vector<ZPoly> out;
  for (auto& fac : factor_monic(ZPoly(g))) {
    // h(y) -> h(a x), primitive part
    std::vector<mpz_class> c = fac.poly.coeffs();
    mpz_class pw = 1;
    for (auto& v : c) {
      v *= pw;
      pw *= a;
    }
    out.push_back(primitive_part(ZPoly(c)));
  }
  return out;
}

ZPoly reduce_mod(const ZPoly& p, const ZPoly& m, mpz_class& den_mul) {
  den_mul = 1;
  if (p.degree() < m.degree()) return p;
  if (m.lc() == 1) return divmod_unit(p, m).second;
  std::vector<mpz_class> r = p.coeffs();
  const int dm = m.degree();
  const mpz_class& l = m.lc();
  for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
    mpz_class t = r[i];
    if (t == 0) continue;
    for (auto& v : r) v *= l;
    den_mul *= l;
    for (int j = 0; j <= dm; ++j) mpz_submul(r[i - dm + j].get_mpz_t(), t.get_mpz_t(), m.coeffs()[j].get_mpz_t());
  }
  r.resize(dm);
  return ZPoly(std::move(r));
}

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  qtrim(r);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - db, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    mpq_class t = r[i] / b.back();
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  r.resize(db);
  qtrim(r);
  qtrim(q);
}

QPoly qmulsub(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q b
  QPoly r(std::max(a.size(), q.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  qtrim(r);
  return r;
}

QPoly to_q(const ZPoly& p) {
  QPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

}  // namespace

AlgBase::AlgBase(const ZPoly& poly, const mpq_class& lo0, const mpq_class& hi0) {
  if (poly.degree() < 1) throw DomainError("base polynomial must have positive degree");
  mpq_class lo = lo0, hi = hi0;
  lo.canonicalize();
  hi.canonicalize();
  if (hi < lo) throw DomainError("empty isolating interval");
  const ZPoly p = primitive_part(poly);
  auto roots = isolate_real_roots(p, lo, hi);
  if (roots.size() != 1) throw DomainError("interval must contain exactly one root, found " + std::to_string(roots.size()));
  const RootInterval& r = roots[0];
  if (r.exact()) {
    impl_ = rational(r.lo).impl_;
    return;
  }
  for (const ZPoly& f : irreducible_factors(squarefree_part(p))) {
    int sl = sign_at(f, r.lo), sh = sign_at(f, r.hi);
    if (sl != 0 && sh != 0 && sl != sh) {
      impl_ = trusted(f, r.lo, r.hi).impl_;
      return;
    }
  }
  throw DomainError("no irreducible factor changes sign on the interval");
}

std::vector<AlgBase> real_roots(const ZPoly& poly, const mpq_class& a, const mpq_class& b) {
  std::vector<AlgBase> out;
  if (poly.degree() < 1) return out;
  const ZPoly p = primitive_part(poly);
  auto roots = isolate_real_roots(p, a, b);
  std::vector<ZPoly> facs;
  for (const RootInterval& r : roots) {
    if (r.exact()) {
      out.push_back(AlgBase::rational(r.lo));
      continue;
    }
    if (facs.empty()) facs = irreducible_factors(squarefree_part(p));
    bool found = false;
    for (const ZPoly& f : facs) {
      int sl = sign_at(f, r.lo), sh = sign_at(f, r.hi);
      if (sl != 0 && sh != 0 && sl != sh) {
        out.push_back(AlgBase::trusted(f, r.lo, r.hi));
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("no irreducible factor changes sign on an isolating interval");
  }
  return out;
}

AlgBase AlgBase::rational(const mpq_class& r0) {
  mpq_class r = r0;
  r.canonicalize();
  auto impl = std::make_shared<Impl>();
  impl->m = ZPoly(std::vector<mpz_class>{-r.get_num(), r.get_den()});
  impl->lo = r;
  impl->hi = r;
  return AlgBase(std::move(impl));
}

AlgBase AlgBase::trusted(ZPoly minpoly, mpq_class lo, mpq_class hi) {
  auto impl = std::make_shared<Impl>();
  impl->m = std::move(minpoly);
  if (lo == hi) return rational(lo);
  impl->sign_lo = sign_at(impl->m, lo);
  if (impl->sign_lo == 0 || sign_at(impl->m, hi) != -impl->sign_lo)
    throw DomainError("isolating interval lacks a sign change");
  impl->lo = std::move(lo);
  impl->hi = std::move(hi);
  return AlgBase(std::move(impl));
}

const ZPoly& AlgBase::minpoly() const { return impl_->m; }

mpq_class AlgBase::rational_value() const {
  if (!is_rational()) throw DomainError("base is not rational");
  mpq_class v(-impl_->m.coeffs()[0], impl_->m.coeffs()[1]);
  v.canonicalize();
  return v;
}

std::pair<mpq_class, mpq_class> AlgBase::interval() const {
  std::lock_guard lock(impl_->mu);
  return {impl_->lo, impl_->hi};
}

void AlgBase::bisect() const {
  if (is_rational()) return;
  std::lock_guard lock(impl_->mu);
  mpq_class mid = (impl_->lo + impl_->hi) / 2;
  if (sign_at(impl_->m, mid) == impl_->sign_lo) impl_->lo = mid;
  else impl_->hi = mid;
}

void AlgBase::refine(const mpq_class& w) const {
  if (is_rational()) return;
  for (;;) {
    {
      std::lock_guard lock(impl_->mu);
      if (impl_->hi - impl_->lo <= w) return;
    }
    bisect();
  }
}

AlgBase AlgBase::refined(const mpq_class& w) const {
  refine(w);
  auto [lo, hi] = interval();
  return lo == hi ? rational(lo) : trusted(minpoly(), lo, hi);
}

std::string AlgBase::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class a, b;
  for (;;) {
    auto [lo, hi] = interval();
    mpq_class x = lo * scale, y = hi * scale;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_fdiv_q(b.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    // An open interval may end exactly on the grid point above the root.
    if (a == b || (!is_rational() && b == a + 1 && y == mpq_class(b))) break;
    bisect();
  }
  std::string s = a.get_str();
  if (digits <= 0) return s;
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

double AlgBase::approx() const {
  refine(mpq_class(1, mpz_class(1) << 60));
  auto [lo, hi] = interval();
  return mpq_class((lo + hi) / 2).get_d();
}

int AlgBase::cmp(const mpq_class& r) const {
  if (is_rational()) return sgn(mpq_class(rational_value() - r));
  std::lock_guard lock(impl_->mu);
  if (r <= impl_->lo) return 1;
  if (r >= impl_->hi) return -1;
  if (sign_at(impl_->m, r) == impl_->sign_lo) {
    impl_->lo = r;
    return 1;
  }
  impl_->hi = r;
  return -1;
}

int AlgBase::cmp(const AlgBase& o) const {
  if (impl_ == o.impl_) return 0;
  if (o.is_rational()) return cmp(o.rational_value());
  if (is_rational()) return -o.cmp(rational_value());
  const bool same_poly = minpoly() == o.minpoly();
  for (;;) {
    auto [a, b] = interval();
    auto [c, d] = o.interval();
    if (b <= c) return -1;
    if (d <= a) return 1;
    if (same_poly) {
      mpq_class lo = std::max(a, c), hi = std::min(b, d);
      if (cmp(lo) > 0 && cmp(hi) < 0) return 0;
      continue;  // the probes shrank our interval
    }
    bisect();
    o.bisect();
  }
}

int AlgBase::sign_of(const ZPoly& p) const { return FieldElem(*this, p).sign(); }

bool AlgBase::is_root_of(const ZPoly& p) const { return FieldElem(*this, p).is_zero(); }

namespace {

// Extends the cached quasi-greedy digits of q to at least n digits, or
// until the period is known.
void extend_alpha(const AlgBase& q, std::size_t n) {
  AlgBase::Impl& st = *q.impl();
  if (st.period || st.digits.size() >= n) return;
  if (st.seen.empty()) st.seen.emplace(FieldElem(q, st.rem_num, st.rem_den).key(), 0);
  const FieldElem x = FieldElem::gen(q);
  while (st.digits.size() < n && !st.period) {
    FieldElem tr = x * FieldElem(q, st.rem_num, st.rem_den);
    int d = tr.cmp(mpq_class(1)) > 0 ? 1 : 0;
    FieldElem r = d ? tr - mpq_class(1) : tr;
    st.digits.push_back(static_cast<unsigned char>(d));
    st.rem_num = r.num();
    st.rem_den = r.den();
    auto [it, fresh] = st.seen.emplace(r.key(), st.digits.size());
    if (!fresh) st.period = std::make_pair(it->second, st.digits.size() - it->second);
  }
}

}  // namespace

int AlgBase::alpha_digit(std::size_t i) const {
  std::lock_guard lock(impl_->alpha_mu);
  extend_alpha(*this, i + 1);
  if (i < impl_->digits.size()) return impl_->digits[i];
  auto [s, len] = *impl_->period;
  return impl_->digits[s + (i - s) % len];
}

Word AlgBase::alpha_prefix(std::size_t n) const {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<char>('0' + alpha_digit(i));
  return Word(out);
}

std::optional<EPSeq> AlgBase::alpha_seq(std::size_t depth) const {
  std::lock_guard lock(impl_->alpha_mu);
  extend_alpha(*this, depth);
  if (!impl_->period) return std::nullopt;
  auto [s, len] = *impl_->period;
  std::string pre, per;
  for (std::size_t i = 0; i < s; ++i) pre += static_cast<char>('0' + impl_->digits[i]);
  for (std::size_t i = s; i < s + len; ++i) per += static_cast<char>('0' + impl_->digits[i]);
  return EPSeq(Word(pre), Word(per));
}

FieldElem::FieldElem(const AlgBase& q, const mpq_class& v) : q_(q), num_(ZPoly::constant(v.get_num())), den_(v.get_den()) {
  normalize();
}

FieldElem::FieldElem(const AlgBase& q, const ZPoly& num, const mpz_class& den) : q_(q), num_(num), den_(den) {
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

void FieldElem::normalize() {
  mpz_class extra;
  num_ = reduce_mod(num_, q_.minpoly(), extra);
  den_ *= extra;
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = content(num_);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    std::vector<mpz_class> c = num_.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    num_ = ZPoly(std::move(c));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (den_ == o.den_) return FieldElem(q_, num_ + o.num_, den_);
  return FieldElem(q_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  if (den_ == o.den_) return FieldElem(q_, num_ - o.num_, den_);
  return FieldElem(q_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const { return FieldElem(q_, num_ * o.num_, den_ * o.den_); }

FieldElem FieldElem::operator-() const { return FieldElem(q_, -num_, den_); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero field element");
  QPoly r0 = to_q(q_.minpoly()), r1 = to_q(num_), s0, s1{mpq_class(1)};
  // invariant: r_i = s_i * num (mod m)
  while (r1.size() > 1) {
    QPoly qq, rr;
    qdivmod(r0, r1, qq, rr);
    QPoly s2 = qmulsub(s0, qq, s1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DomainError("field element not invertible (reducible modulus)");
  // s1 * num = r1[0] (mod m): inverse of num/den is den * s1 / r1[0]
  mpz_class l = 1;
  for (auto& c : s1) {
    c /= r1[0];
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> n;
  for (auto& c : s1) n.push_back(mpz_class(c * l) * den_);
  return FieldElem(q_, ZPoly(std::move(n)), l);
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

std::pair<mpq_class, mpq_class> FieldElem::range() const {
  auto [lo, hi] = q_.interval();
  auto [a, b] = eval_range(num_, lo, hi);
  return {a / den_, b / den_};
}

int FieldElem::sign() const {
  if (num_.is_zero()) return 0;
  if (num_.degree() == 0) return sgn(num_.coeffs()[0]);
  for (;;) {
    auto [lo, hi] = q_.interval();
    auto [a, b] = eval_range(num_, lo, hi);
    if (a > 0) return 1;
    if (b < 0) return -1;
    q_.bisect();
  }
}

std::string FieldElem::key() const { return den_.get_str() + ":" + num_.json(); }

SeriesForm series_form(const EPSeq& s) {
  const std::size_t k = s.pre().size(), p = s.period().size();
  std::vector<mpz_class> u(k + 1, 0), v(p + 1, 0);
  for (std::size_t i = 0; i < k; ++i) u[k - 1 - i] = s.pre()[i];
  for (std::size_t j = 0; j < p; ++j) v[p - 1 - j] = s.period()[j];
  const ZPoly xp1 = ZPoly::monomial(1, p) - ZPoly{1};
  return {ZPoly(u) * xp1 + ZPoly(v), xp1.shifted(k)};
}

FieldElem eval(const EPSeq& s, const AlgBase& q) {
  if (q.cmp(mpq_class(1)) <= 0) throw DomainError("eval needs q > 1");
  SeriesForm f = series_form(s);
  return FieldElem(q, f.num) / FieldElem(q, f.den);
}

namespace {

FieldElem horner(const ZPoly& p, const FieldElem& t) {
  FieldElem acc(t.base(), mpq_class(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * t + mpq_class(p.coeffs()[i]);
  return acc;
}

}  // namespace

FieldElem eval(const EPSeq& s, const FieldElem& t) {
  if (t.cmp(mpq_class(1)) <= 0) throw DomainError("eval needs base > 1");
  SeriesForm f = series_form(s);
  return horner(f.num, t) / horner(f.den, t);
}

Expansion expand_one(const FieldElem& t, bool greedy, std::size_t n, bool stop_at_period) {
  if (t.cmp(mpq_class(1)) <= 0) throw DomainError("expansion base must exceed 1");
  Expansion out;
  std::string digits;
  FieldElem r(t.base(), mpq_class(1));
  std::unordered_map<std::string, std::size_t> seen{{r.key(), 0}};
  bool tracking = true;
  while (digits.size() < n) {
    FieldElem tr = t * r;
    int c = tr.cmp(mpq_class(1));
    int d = greedy ? (c >= 0) : (c > 0);
    r = d ? tr - mpq_class(1) : tr;
    digits += static_cast<char>('0' + d);
    if (greedy && r.is_zero()) {
      out.finite = true;
      break;
    }
    if (tracking) {
      auto [it, fresh] = seen.emplace(r.key(), digits.size());
      if (!fresh) {
        const std::size_t s = it->second;
        out.periodic = EPSeq(Word(digits.substr(0, s)), Word(digits.substr(s)));
        tracking = false;
        if (stop_at_period) break;
      }
    }
  }
  out.digits = Word(digits);
  return out;
}

}  // namespace b2
