#include "b2/factor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "b2/error.hpp"
#include "nmod.hpp"

namespace b2 {

namespace {

using nmod::Poly;
using nmod::u64;

// Frobenius map h -> h^p mod f as a matrix on the power basis.
struct Frobenius {
  std::vector<Poly> rows;  // x^{ip} mod f
  Poly f;
  u64 p;
  Frobenius(const Poly& f_, u64 p_) : f(f_), p(p_) {
    const int d = nmod::deg(f);
    Poly xp = nmod::powmod(Poly{0, 1}, mpz_class(static_cast<unsigned long>(p)), f, p);
    rows.push_back(Poly{1});
    for (int i = 1; i < d; ++i) rows.push_back(nmod::rem(nmod::mul(rows.back(), xp, p), f, p));
  }
  Poly apply(const Poly& h) const {
    Poly r(nmod::deg(f) > 0 ? nmod::deg(f) : 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!h[i]) continue;
      const Poly& row = rows[i];
      for (std::size_t j = 0; j < row.size(); ++j) r[j] = (r[j] + h[i] * row[j]) % p;
    }
    nmod::trim(r);
    return r;
  }
};

struct DdfPart {
  int degree;
  Poly product;
};

std::vector<DdfPart> ddf(const Poly& f, u64 p) {
  std::vector<DdfPart> out;
  Frobenius frob(f, p);
  Poly rest = f, h{0, 1};
  const Poly x{0, 1};
  for (int k = 1; 2 * k <= nmod::deg(rest); ++k) {
    h = frob.apply(h);
    Poly g = nmod::gcd(nmod::sub(h, x, p), rest, p);
    if (nmod::deg(g) > 0) {
      out.push_back({k, g});
      Poly q, r;
      nmod::divmod(rest, g, p, q, r);
      rest = q;
    }
  }
  if (nmod::deg(rest) > 0) out.push_back({nmod::deg(rest), nmod::make_monic(rest, p)});
  return out;
}

void edf(const Poly& a, int k, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int da = nmod::deg(a);
  if (da == k) {
    out.push_back(nmod::make_monic(a, p));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, k);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    Poly r(da);
    for (auto& v : r) v = dist(rng);
    nmod::trim(r);
    if (nmod::deg(r) < 1) continue;
    Poly w = nmod::sub(nmod::powmod(r, e, a, p), Poly{1}, p);
    Poly g = nmod::gcd(w, a, p);
    if (nmod::deg(g) > 0 && nmod::deg(g) < da) {
      Poly q, rr;
      nmod::divmod(a, g, p, q, rr);
      edf(g, k, p, rng, out);
      edf(q, k, p, rng, out);
      return;
    }
  }
}

// Symmetric residue of every coefficient mod m.
ZPoly mods(const ZPoly& a, const mpz_class& m) {
  std::vector<mpz_class> c = a.coeffs();
  const mpz_class half = m / 2;
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return ZPoly(std::move(c));
}

ZPoly lift_poly(const Poly& a) {
  std::vector<mpz_class> c;
  for (u64 v : a) c.emplace_back(static_cast<unsigned long>(v));
  return ZPoly(std::move(c));
}


// Quadratic Hensel lifting of f = g h (mod p) to modulus >= target.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, const mpz_class& target, mpz_class& modulus) {
  Poly s0, t0;
  Poly gg = nmod::reduce(g, p), hh = nmod::reduce(h, p);
  Poly one = nmod::xgcd(gg, hh, p, s0, t0);
  if (one != Poly{1}) throw DomainError("Hensel lifting needs coprime factors");
  ZPoly s = lift_poly(s0), t = lift_poly(t0);
  mpz_class m = p;
  while (m < target) {
    mpz_class m2 = m * m;
    ZPoly e = mods(f - g * h, m2);
    ZPoly se = mods(s * e, m2);
    auto [q, r] = divmod_unit(se, h);
    ZPoly g2 = mods(g + t * e + q * g, m2);
    ZPoly h2 = mods(h + r, m2);
    ZPoly b = mods(s * g2 + t * h2 - ZPoly{1}, m2);
    ZPoly sb = mods(s * b, m2);
    auto [c, d] = divmod_unit(sb, h2);
    s = mods(s - d, m2);
    t = mods(t - t * b - c * g2, m2);
    g = g2;
    h = h2;
    m = m2;
  }
  modulus = m;
}

std::vector<ZPoly> hensel_multi(const ZPoly& f, const std::vector<Poly>& facs, u64 p, const mpz_class& target,
                                mpz_class& modulus) {
  std::vector<ZPoly> lifted;
  ZPoly cur = f;
  for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
    Poly rest{1};
    for (std::size_t j = i + 1; j < facs.size(); ++j) rest = nmod::mul(rest, facs[j], p);
    ZPoly g = lift_poly(facs[i]), h = lift_poly(rest);
    hensel_pair(cur, g, h, p, target, modulus);
    lifted.push_back(g);
    cur = h;
  }
  lifted.push_back(cur);
  return lifted;
}

std::set<int> subset_degrees(const std::vector<DdfPart>& parts) {
  std::set<int> sums{0};
  for (const auto& part : parts) {
    int cnt = nmod::deg(part.product) / part.degree;
    for (int c = 0; c < cnt; ++c) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + part.degree);
      sums = std::move(next);
    }
  }
  return sums;
}

std::size_t factor_count(const std::vector<DdfPart>& parts) {
  std::size_t n = 0;
  for (const auto& part : parts) n += nmod::deg(part.product) / part.degree;
  return n;
}

struct PrimeChoice {
  u64 p = 0;
  std::vector<DdfPart> parts;
  bool irreducible = false;
};

PrimeChoice choose_prime(const ZPoly& f) {
  const int d = f.degree();
  PrimeChoice best;
  std::set<int> possible;
  for (int i = 0; i <= d; ++i) possible.insert(i);
  int good = 0;
  for (u64 p = 101; good < 7 && p < 200000; p += 2) {
    if (!nmod::is_prime(p)) continue;
    Poly fp = nmod::reduce(f, p);
    if (nmod::deg(fp) != d) continue;
    if (nmod::deg(nmod::gcd(fp, nmod::derivative(fp, p), p)) != 0) continue;
    ++good;
    auto parts = ddf(fp, p);
    std::set<int> sums = subset_degrees(parts), inter;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(), std::inserter(inter, inter.end()));
    possible = std::move(inter);
    if (best.p == 0 || factor_count(parts) < factor_count(best.parts)) {
      best.p = p;
      best.parts = std::move(parts);
    }
    if (possible.size() <= 2) {
      best.irreducible = true;
      return best;
    }
  }
  if (best.p == 0) throw DomainError("no suitable prime for factorization");
  best.irreducible = factor_count(best.parts) == 1;
  return best;
}

mpz_class mignotte(const ZPoly& f) {
  mpz_class s = 0;
  for (const auto& c : f.coeffs()) s += c * c;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  r += 1;
  mpz_class two_d;
  mpz_ui_pow_ui(two_d.get_mpz_t(), 2, f.degree());
  return r * two_d;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (f.degree() <= 1) return {f};
  PrimeChoice pc = choose_prime(f);
  if (pc.irreducible) return {f};
  const u64 p = pc.p;
  std::mt19937_64 rng(0x5eed + p);
  std::vector<Poly> modfac;
  for (const auto& part : pc.parts) edf(part.product, part.degree, p, rng, modfac);
  const mpz_class target = 2 * mignotte(f) + 1;
  mpz_class M;
  std::vector<ZPoly> lifted = hensel_multi(f, modfac, p, target, M);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      // Cheap constant-term screen before the full product.
      mpz_class c0 = 1;
      for (std::size_t i : idx) c0 = c0 * lifted[i].coeff(0) % M;
      ZPoly tmp = mods(ZPoly::constant(c0), M);
      mpz_class cc = tmp.coeff(0);
      if (cc == 0 ? rest.coeff(0) != 0 : !mpz_divisible_p(rest.coeff(0).get_mpz_t(), cc.get_mpz_t())) continue;
      ZPoly g{1};
      for (std::size_t i : idx) g = mods(g * lifted[i], M);
      ZPoly q;
      if (try_exact_div(rest, g, &q)) {
        found.push_back(g);
        rest = q;
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(lifted[i]);
        lifted = std::move(keep);
        hit = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  return false;
}

}  // namespace

std::vector<Factor> factor_monic(const ZPoly& f0) {
  if (!f0.is_monic()) throw DomainError("factor_monic needs a monic polynomial");
  std::vector<Factor> out;
  std::size_t xs = 0;
  ZPoly f = strip_x(f0, &xs);
  if (xs) out.push_back({ZPoly{0, 1}, static_cast<int>(xs)});
  if (f.degree() > 0) {
    auto parts = squarefree_decomposition(f);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() <= 0) continue;
      for (auto& g : zassenhaus(to_monic(parts[i]))) out.push_back({to_monic(g), static_cast<int>(i + 1)});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const ZPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto fs = factor_monic(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

namespace {

Poly charpoly_mod(std::vector<std::vector<u64>> h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i)
      if (h[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const u64 iv = nmod::inv(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      u64 u = nmod::mul(h[i][m - 1], iv, p);
      if (!u) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = nmod::sub(h[i][j], nmod::mul(u, h[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j) h[j][m] = nmod::add(h[j][m], nmod::mul(u, h[j][i], p), p);
    }
  }
  std::vector<Poly> ps(n + 1);
  ps[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur = nmod::mul(Poly{nmod::sub(0, h[m - 1][m - 1], p), 1}, ps[m - 1], p);
    u64 prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = nmod::mul(prod, h[m - i][m - i - 1], p);
      u64 coef = nmod::mul(h[m - i - 1][m - 1], prod, p);
      if (coef) cur = nmod::sub(cur, nmod::scale(ps[m - i - 1], coef, p), p);
    }
    ps[m] = cur;
  }
  Poly r = ps[n];
  r.resize(n + 1, 0);
  return r;
}

}  // namespace

ZPoly charpoly(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return ZPoly{1};
  long maxabs = 1;
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("charpoly needs a square matrix");
    for (long v : row) maxabs = std::max(maxabs, std::labs(v));
  }
  // Coefficient bound 2^n (sqrt(n) * max)^n, in bits, plus sign.
  const double bits = n + n * (0.5 * std::log2(static_cast<double>(n)) + std::log2(static_cast<double>(maxabs))) + 2;
  std::vector<mpz_class> acc(n + 1, 0);
  mpz_class mod = 1;
  u64 p = (1ULL << 31) - 1;
  while (mpz_sizeinbase(mod.get_mpz_t(), 2) < bits + 1) {
    while (!nmod::is_prime(p)) p -= 2;
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h[i][j] = static_cast<u64>(((a[i][j] % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p));
    Poly cp = charpoly_mod(h, p);
    // CRT: acc = acc mod `mod`, cp mod p.
    const mpz_class pz = static_cast<unsigned long>(p);
    mpz_class minv;
    mpz_invert(minv.get_mpz_t(), mod.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i <= n; ++i) {
      mpz_class r = static_cast<unsigned long>(cp[i]);
      mpz_class t = (r - acc[i]) * minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      acc[i] += mod * t;
    }
    mod *= pz;
    p -= 2;
  }
  return mods(ZPoly(acc), mod);
}

}  // namespace b2
