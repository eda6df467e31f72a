#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "b2/poly.hpp"
#include "b2/words.hpp"

namespace b2 {

class FieldElem;

// A real algebraic number q > 1 given by an irreducible primitive integer
// polynomial (positive leading coefficient; monic except for rational
// bases) and an isolating interval. Copies share one refinement cache, so
// refining never changes the represented number.
class AlgBase {
 public:
  // Picks the irreducible factor of `poly` with a root in [lo, hi]; the
  // interval must contain exactly one distinct root of `poly`.
  AlgBase(const ZPoly& poly, const mpq_class& lo, const mpq_class& hi);
  static AlgBase rational(const mpq_class& r);
  // `minpoly` already irreducible and primitive, (lo, hi) open isolating
  // interval with a sign change, or lo == hi an exact rational root.
  static AlgBase trusted(ZPoly minpoly, mpq_class lo, mpq_class hi);

  const ZPoly& minpoly() const;
  int degree() const { return minpoly().degree(); }
  bool is_rational() const { return degree() == 1; }
  mpq_class rational_value() const;

  // Current isolating interval (closed; a point for rational values).
  std::pair<mpq_class, mpq_class> interval() const;
  // Shrinks the shared interval to width <= w.
  void refine(const mpq_class& w) const;
  // Halves the shared interval once.
  void bisect() const;
  AlgBase refined(const mpq_class& w) const;

  // Truncated decimal expansion with `digits` certified fractional digits.
  std::string decimal(int digits) const;
  double approx() const;

  // Exact comparisons.
  int cmp(const AlgBase& o) const;
  int cmp(const mpq_class& r) const;
  bool operator==(const AlgBase& o) const { return cmp(o) == 0; }
  bool operator<(const AlgBase& o) const { return cmp(o) < 0; }
  bool operator<=(const AlgBase& o) const { return cmp(o) <= 0; }
  bool operator>(const AlgBase& o) const { return cmp(o) > 0; }
  bool operator>=(const AlgBase& o) const { return cmp(o) >= 0; }

  // Sign of p at this number, exact.
  int sign_of(const ZPoly& p) const;
  // Whether this number is a root of p.
  bool is_root_of(const ZPoly& p) const;

  // Quasi-greedy expansion of 1, cached.
  Word alpha_prefix(std::size_t n) const;
  int alpha_digit(std::size_t i) const;
  // The expansion as EPSeq when a remainder repeats within `depth` digits.
  std::optional<EPSeq> alpha_seq(std::size_t depth) const;

  struct Impl;
  const std::shared_ptr<Impl>& impl() const { return impl_; }

 private:
  explicit AlgBase(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

// Every distinct real root of p in [a, b], ascending.
std::vector<AlgBase> real_roots(const ZPoly& p, const mpq_class& a, const mpq_class& b);

// Element of Q(q) as num(q)/den, num of degree < deg(minpoly).
class FieldElem {
 public:
  FieldElem(const AlgBase& q, const mpq_class& v);
  FieldElem(const AlgBase& q, const ZPoly& num, const mpz_class& den = 1);
  static FieldElem gen(const AlgBase& q) { return FieldElem(q, ZPoly{0, 1}); }

  const AlgBase& base() const { return q_; }
  const ZPoly& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator+(const mpq_class& v) const { return *this + FieldElem(q_, v); }
  FieldElem operator-(const mpq_class& v) const { return *this - FieldElem(q_, v); }
  FieldElem operator*(const mpq_class& v) const { return *this * FieldElem(q_, v); }
  FieldElem inverse() const;

  bool is_zero() const { return num_.is_zero(); }
  bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
  int sign() const;
  int cmp(const FieldElem& o) const { return (*this - o).sign(); }
  int cmp(const mpq_class& v) const { return (*this - v).sign(); }
  // Enclosure of the value.
  std::pair<mpq_class, mpq_class> range() const;
  // Canonical text key for hashing.
  std::string key() const;

 private:
  void normalize();
  AlgBase q_;
  ZPoly num_;
  mpz_class den_;
};

// Closed form of a sequence value: (s)_x = N(x) / D(x) with
// D = x^k (x^p - 1) for k = |pre|, p = |period|.
struct SeriesForm {
  ZPoly num, den;
};
SeriesForm series_form(const EPSeq& s);

FieldElem eval(const EPSeq& s, const AlgBase& q);
FieldElem eval(const EPSeq& s, const FieldElem& t);

// Digits of the quasi-greedy (greedy=false) or greedy expansion of 1 in
// base t > 1. Stops early when the greedy remainder hits 0. Reports the
// eventual period when a remainder repeats.
struct Expansion {
  Word digits;
  bool finite = false;           // greedy remainder reached 0
  std::optional<EPSeq> periodic;  // exact sequence when a remainder repeated
};
Expansion expand_one(const FieldElem& t, bool greedy, std::size_t n, bool stop_at_period = true);

}  // namespace b2
