#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace b2 {

// Dense integer polynomial, coefficients low to high, no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  ZPoly(std::initializer_list<long> coeffs);
  explicit ZPoly(std::vector<mpz_class> coeffs);

  static ZPoly monomial(const mpz_class& c, std::size_t k);
  static ZPoly constant(const mpz_class& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lc() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly operator*(const mpz_class& k) const;
  ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
  ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
  ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
  bool operator==(const ZPoly& o) const { return c_ == o.c_; }

  // x^k * this
  ZPoly shifted(std::size_t k) const;
  std::string json() const;  // "[c0,c1,...]"

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Division by a divisor with leading coefficient +-1.
std::pair<ZPoly, ZPoly> divmod_unit(const ZPoly& a, const ZPoly& b);
// a / b when b divides a in Z[x]; returns false if it does not.
bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly* quotient);
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

mpz_class content(const ZPoly& p);
// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
ZPoly derivative(const ZPoly& p);
// Primitive gcd with positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
ZPoly squarefree_part(const ZPoly& p);
// Yun decomposition of a primitive polynomial: result[i] is the product of
// the factors of multiplicity i+1.
std::vector<ZPoly> squarefree_decomposition(const ZPoly& p);

ZPoly cyclotomic(unsigned n);
// Divides out x^k. Returns the number of x factors removed via *count.
ZPoly strip_x(const ZPoly& p, std::size_t* count = nullptr);
// Divides out f as many times as possible.
ZPoly strip_factor(const ZPoly& p, const ZPoly& f, std::size_t* count = nullptr);
// Divides out the cyclotomic factors Phi_e for every e dividing some entry.
ZPoly strip_cyclotomic(const ZPoly& p, const std::vector<unsigned>& periods);
// Leading coefficient made +1 by negation if it is -1; throws otherwise.
ZPoly to_monic(const ZPoly& p);

// den^deg * p(num/den), an integer with the sign of p(num/den) for den > 0.
mpz_class eval_homog(const ZPoly& p, const mpz_class& num, const mpz_class& den);
mpq_class eval(const ZPoly& p, const mpq_class& x);
int sign_at(const ZPoly& p, const mpq_class& x);
// Enclosure of p over [lo, hi] with 0 <= lo <= hi, via p = p+ - p-.
std::pair<mpq_class, mpq_class> eval_range(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);

// p(a + x) and x^d p(1/x)
std::vector<mpq_class> taylor_shift(const std::vector<mpq_class>& p, const mpq_class& a);
// Upper bound (Descartes) on the number of roots of p in the open interval (a, b).
int descartes_bound(const ZPoly& p, const mpq_class& a, const mpq_class& b);

struct RootInterval {
  mpq_class lo, hi;  // lo == hi marks an exact rational root
  bool exact() const { return lo == hi; }
};

// Isolating intervals for the distinct real roots of p in [a, b], ascending.
// Non-exact intervals are open with a sign change of the squarefree part.
std::vector<RootInterval> isolate_real_roots(const ZPoly& p, const mpq_class& a, const mpq_class& b);
// Bisects an isolating interval of a squarefree p until hi - lo <= width.
RootInterval refine_root(const ZPoly& p, RootInterval r, const mpq_class& width);

// Cauchy-type bound: every real root has |x| < bound.
mpq_class root_bound(const ZPoly& p);

}  // namespace b2
