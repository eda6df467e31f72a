#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "b2/algebraic.hpp"
#include "b2/repr.hpp"
#include "b2/words.hpp"

namespace b2 {

struct B2Witness {
  EPSeq c, d;
  AlgBase root;
  ZPoly fpoly;      // f_minpoly(c, d)
  bool admissible;  // c and d in A'_root
  std::vector<std::pair<ReprVector, ReprVector>> reprs;
  std::optional<int> derived_order;
};

// f(q) = (1c)_q + (1d)_q - (1^inf)_q
mpq_class f_eval(const EPSeq& c, const EPSeq& d, const mpq_class& q);
FieldElem f_eval(const EPSeq& c, const EPSeq& d, const AlgBase& q);

// Integer polynomial with the sign of f on (1, inf), before any reduction.
ZPoly f_numerator(const EPSeq& c, const EPSeq& d);
// Monic reduction of the numerator: x, x - 1 and cyclotomic factors of the
// periods removed. Its roots in (1, 2] are the roots of f there.
ZPoly f_minpoly(const EPSeq& c, const EPSeq& d);
int f_sign(const EPSeq& c, const EPSeq& d, const AlgBase& q);

enum class MonoCase { PositiveI, PositiveII, IncreasingIII };
MonoCase monotone_case(const EPSeq& c, const EPSeq& d);
const char* mono_case_name(MonoCase m);

// The constant q_f, root of x^3 - 2x^2 + x - 1.
const AlgBase& q_f_const();

// Root of f on [lo, hi] subset of (1, 2]. From q_f up f is monotone by case:
// NoRootByCase for the positive cases, nullopt without a sign change. A
// bracket reaching below q_f is isolated directly and must hold at most one
// root (DomainError otherwise).
std::optional<AlgBase> solve_qcd(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi);
// All roots of f in [lo, hi] subset of (1, 2] by root isolation of f_minpoly.
std::vector<AlgBase> f_roots(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi);

std::optional<B2Witness> certify_b2(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi);
B2Witness make_witness(const EPSeq& c, const EPSeq& d, const AlgBase& root);

struct VWitness {
  EPSeq c, d;
  EPSeq alpha;  // (a^+ reflect(a^+))^inf
};
// Pair whose root is the base with alpha = (a^+ reflect(a^+))^inf, m >= 2.
VWitness witness_for_V_base(const Word& gen);

std::pair<EPSeq, EPSeq> prop62_pair(const ComponentSpec& comp, unsigned n);
// The vector pair underlying prop62_pair: (k=(0), j=(1,inf)) with initial
// 0^(2^n m) reflect(omega_0), and (k=(0..n-2), s=0, j=(1..1,inf)) with
// initial reflect(omega_0).
std::pair<ReprVector, ReprVector> prop62_vectors(unsigned n);

// omega (omega_0^-)^j0 (w_k1 ~w_k1)^j1 (w_k1 ~w_k2)^s2 ... (w_km ~w_km)^inf
EPSeq udiff_generate(const ComponentSpec& comp, const Word& omega, const ReprVector& v);

}  // namespace b2
