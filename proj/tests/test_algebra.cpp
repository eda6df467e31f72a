#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "b2/algebraic.hpp"
#include "b2/error.hpp"
#include "b2/factor.hpp"
#include "b2/poly.hpp"
#include "oracle.hpp"

using namespace b2;

namespace {

long double horner(const ZPoly& p, long double x) {
  long double v = 0;
  for (int i = p.degree(); i >= 0; --i) v = v * x + p.coeff(i).get_d();
  return v;
}

ZPoly random_poly(std::mt19937& g, int deg, long lim) {
  std::uniform_int_distribution<long> c(-lim, lim);
  std::vector<mpz_class> v;
  for (int i = 0; i <= deg; ++i) v.emplace_back(c(g));
  v.back() = 1;
  return ZPoly(v);
}

// Real roots by scanning a fine grid and bisecting sign changes.
std::vector<long double> grid_roots(const ZPoly& p, long double a, long double b) {
  std::vector<long double> out;
  const int steps = 20000;
  long double x0 = a, v0 = horner(p, a);
  for (int i = 1; i <= steps; ++i) {
    long double x1 = a + (b - a) * i / steps, v1 = horner(p, x1);
    if (v0 == 0) out.push_back(x0);
    else if ((v0 < 0) != (v1 < 0) && v1 != 0) {
      long double lo = x0, hi = x1;
      for (int k = 0; k < 80; ++k) {
        long double mid = (lo + hi) / 2;
        if ((horner(p, mid) < 0) == (v0 < 0)) lo = mid;
        else hi = mid;
      }
      out.push_back((lo + hi) / 2);
    }
    x0 = x1;
    v0 = v1;
  }
  return out;
}

// Faddeev-LeVerrier over Q.
ZPoly leverrier(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n)), M(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j];
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M = A * M_prev + c_{n-k+1} I
    std::vector<std::vector<mpq_class>> AM(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (std::size_t t = 0; t < n; ++t) s += A[i][t] * M[t][j];
        AM[i][j] = s + (i == j ? c[n - k + 1] : mpq_class(0));
      }
    M = AM;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) tr += A[i][t] * M[t][i];
    c[n - k] = -tr / mpq_class(k);
  }
  std::vector<mpz_class> z;
  for (auto& v : c) z.push_back(v.get_num());
  return ZPoly(z);
}

}  // namespace

TEST_CASE("ring operations agree with evaluation") {
  std::mt19937 g(1);
  for (int t = 0; t < 200; ++t) {
    const ZPoly a = random_poly(g, t % 6, 9), b = random_poly(g, t % 4, 9);
    for (long x : {-3L, -1L, 0L, 2L, 5L}) {
      const mpq_class q(x);
      CHECK(eval(a * b, q) == eval(a, q) * eval(b, q));
      CHECK(eval(a + b, q) == eval(a, q) + eval(b, q));
      CHECK(eval(a - b, q) == eval(a, q) - eval(b, q));
    }
    auto [qu, r] = divmod_unit(a, b);
    CHECK(qu * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK(ZPoly{1, 2, 3}.json() == "[1,2,3]");
  CHECK(ZPoly{0, 0}.is_zero());
}

TEST_CASE("gcd, squarefree part and cyclotomics") {
  const ZPoly qf{-1, 1, -2, 1}, xm1{-1, 1};
  CHECK(gcd(qf * xm1, xm1 * xm1) == xm1);
  CHECK(squarefree_part(qf * qf * xm1) == qf * xm1);
  auto dec = squarefree_decomposition(qf * xm1 * xm1);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == qf);
  CHECK(dec[1] == xm1);
  CHECK(cyclotomic(1) == xm1);
  CHECK(cyclotomic(4) == (ZPoly{1, 0, 1}));
  CHECK(cyclotomic(6) == (ZPoly{1, -1, 1}));
  // x^12 - 1 is the product of Phi_d over d | 12
  ZPoly prod{1};
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u}) prod *= cyclotomic(d);
  CHECK(prod == ZPoly::monomial(1, 12) - ZPoly{1});
  std::size_t k = 0;
  CHECK(strip_x(qf.shifted(3), &k) == qf);
  CHECK(k == 3);
  CHECK(strip_cyclotomic(qf * cyclotomic(3) * cyclotomic(2), {6}) == qf);
  CHECK(to_monic(-qf) == qf);
  CHECK_THROWS(to_monic(ZPoly{1, 2}));
}

TEST_CASE("factorisation reproduces its input") {
  std::mt19937 g(2);
  const ZPoly qs{-1, -1, -2, 0, 1}, qf{-1, 1, -2, 1}, phi{-1, -1, 1};
  auto f = factor_monic(qs * qf * qf * phi);
  REQUIRE(f.size() == 3);
  ZPoly prod{1};
  for (auto& [p, m] : f)
    for (int i = 0; i < m; ++i) prod *= p;
  CHECK(prod == qs * qf * qf * phi);
  CHECK(is_irreducible(qs));
  CHECK_FALSE(is_irreducible(qf * phi));
  // x^4 + 1 is irreducible yet splits modulo every prime
  CHECK(is_irreducible(ZPoly{1, 0, 0, 0, 1}));
  for (int t = 0; t < 60; ++t) {
    const ZPoly a = random_poly(g, 1 + t % 5, 6), b = random_poly(g, 1 + t % 3, 6);
    auto fs = factor_monic(a * b);
    ZPoly p{1};
    for (auto& [h, m] : fs) {
      CHECK(h.is_monic());
      for (int i = 0; i < m; ++i) p *= h;
    }
    CHECK(p == a * b);
  }
}

TEST_CASE("characteristic polynomial matches Leverrier") {
  std::mt19937 g(4);
  std::bernoulli_distribution bit(0.4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 7;
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (auto& row : a)
      for (auto& v : row) v = bit(g);
    CHECK(charpoly(a) == leverrier(a));
  }
}

TEST_CASE("root isolation against a grid scan") {
  std::mt19937 g(6);
  for (int t = 0; t < 80; ++t) {
    const ZPoly p = random_poly(g, 2 + t % 6, 5);
    const auto iv = isolate_real_roots(p, mpq_class(-4), mpq_class(4));
    const auto want = grid_roots(p, -4, 4);
    // double roots are invisible to a sign scan; compare on squarefree input only
    if (squarefree_part(p) == primitive_part(p)) {
      CHECK(iv.size() == want.size());
      for (std::size_t i = 0; i < std::min(iv.size(), want.size()); ++i) {
        CHECK(iv[i].lo.get_d() <= double(want[i]) + 1e-9);
        CHECK(iv[i].hi.get_d() >= double(want[i]) - 1e-9);
      }
    }
  }
  const ZPoly qf{-1, 1, -2, 1};
  auto r = isolate_real_roots(qf, mpq_class(1), mpq_class(2));
  REQUIRE(r.size() == 1);
  const RootInterval fine = refine_root(qf, r[0], mpq_class(1, 1000000));
  CHECK(fine.hi - fine.lo <= mpq_class(1, 1000000));
  CHECK(std::fabs(fine.lo.get_d() - 1.754877666) < 1e-6);
  CHECK(descartes_bound(qf, mpq_class(1), mpq_class(2)) == 1);
  auto e = isolate_real_roots(ZPoly{-3, 2}, mpq_class(0), mpq_class(2));
  REQUIRE(e.size() == 1);
  CHECK(e[0].lo <= mpq_class(3, 2));
  CHECK(e[0].hi >= mpq_class(3, 2));
  // root at the midpoint of the search range
  auto m = isolate_real_roots(ZPoly{-1, 1} * ZPoly{-3, 1}, mpq_class(0), mpq_class(2));
  REQUIRE(m.size() == 1);
  CHECK(m[0].lo <= 1);
  CHECK(m[0].hi >= 1);
}

TEST_CASE("algebraic bases and comparisons") {
  const AlgBase phi(ZPoly{-1, -1, 1}, mpq_class(3, 2), mpq_class(2));
  const AlgBase qf(ZPoly{-1, 1, -2, 1}, mpq_class(17, 10), mpq_class(18, 10));
  CHECK(phi.decimal(10) == "1.6180339887");
  CHECK(qf.decimal(5) == "1.75487");
  CHECK(phi < qf);
  CHECK(qf.cmp(mpq_class(7, 4)) > 0);
  CHECK(AlgBase::rational(mpq_class(2)).is_rational());
  // a reducible input picks the factor with the root
  const AlgBase q2(ZPoly{-1, 1, -2, 1} * ZPoly{-1, -1, 1}, mpq_class(17, 10), mpq_class(18, 10));
  CHECK(q2.minpoly() == (ZPoly{-1, 1, -2, 1}));
  CHECK(q2 == qf);
  CHECK_THROWS_AS(AlgBase(ZPoly{-1, -1, 1}, mpq_class(2), mpq_class(3)), DomainError);
  CHECK(phi.sign_of(ZPoly{-1, -1, 1}) == 0);
  CHECK(phi.sign_of(ZPoly{-2, 0, 1}) > 0);
  auto rr = real_roots(ZPoly{-1, -1, 1} * ZPoly{-1, 1, -2, 1} * ZPoly{-2, 1}, mpq_class(1), mpq_class(2));
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == phi);
  CHECK(rr[1] == qf);
  CHECK(rr[2].rational_value() == 2);
}

TEST_CASE("field arithmetic agrees with floating evaluation") {
  const AlgBase qs(ZPoly{-1, -1, -2, 0, 1}, mpq_class(17, 10), mpq_class(18, 10));
  const long double q = 1.7106440950450329L;
  std::mt19937 g(8);
  std::uniform_int_distribution<long> c(-5, 5);
  auto rnd = [&] { return FieldElem(qs, ZPoly{c(g), c(g), c(g), c(g), c(g), c(g)}, 1 + (c(g) + 5)); };
  auto val = [&](const FieldElem& x) {
    return horner(x.num(), q) / x.den().get_d();
  };
  for (int t = 0; t < 100; ++t) {
    const FieldElem a = rnd(), b = rnd();
    CHECK(std::fabs(double(val(a * b) - val(a) * val(b))) < 1e-9);
    CHECK(std::fabs(double(val(a + b) - val(a) - val(b))) < 1e-9);
    if (!b.is_zero()) {
      CHECK(a / b * b == a);
      const long double d = val(a) - val(b);
      if (std::fabs(double(d)) > 1e-9) CHECK(a.cmp(b) == (d > 0 ? 1 : -1));
    }
  }
  const FieldElem x = FieldElem::gen(qs);
  CHECK((x * x * x * x - x * x * 2 - x - mpq_class(1)).is_zero());
  CHECK(x.key() == FieldElem::gen(qs).key());
}

TEST_CASE("series closed form") {
  std::mt19937 g(12);
  for (int t = 0; t < 100; ++t) {
    const EPSeq s = oracle::random_seq(g);
    const SeriesForm f = series_form(s);
    const long double q = 1.3L + 0.007L * t;
    CHECK(std::fabs(double(horner(f.num, q) / horner(f.den, q) - oracle::value(s, q))) < 1e-10);
  }
  const AlgBase qf(ZPoly{-1, 1, -2, 1}, mpq_class(17, 10), mpq_class(18, 10));
  CHECK(eval(EPSeq::periodic(Word("1100")), qf) == FieldElem(qf, mpq_class(1)));
}
