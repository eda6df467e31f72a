#include "nmod.hpp"

#include <stdexcept>

namespace b2::nmod {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return pow(a, p - 2, p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const ZPoly& f, u64 p) {
  Poly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0)) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 k, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], k, p);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero mod p");
  r = a;
  trim(r);
  const int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(deg(r) - db + 1, 0);
  const u64 li = inv(b.back(), p);
  for (int i = deg(r); i >= db; --i) {
    u64 t = mul(r[i], li, p);
    q[i - db] = t;
    if (!t) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(t, b[j], p), p);
  }
  r.resize(db);
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly make_monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly gcd(const Poly& a0, const Poly& b0, u64 p) {
  Poly a = a0, b = b0;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly xgcd(const Poly& a0, const Poly& b0, u64 p, Poly& s, Poly& t) {
  Poly r0 = a0, r1 = b0, s0{1}, s1, t0, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  u64 li = inv(r0.back(), p);
  s = scale(s0, li, p);
  t = scale(t0, li, p);
  return scale(r0, li, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p) {
  Poly r{1}, b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, p), m, p);
  }
  if (e == 0) r = rem(Poly{1}, m, p);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace b2::nmod
