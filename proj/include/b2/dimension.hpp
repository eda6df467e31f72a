#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "b2/algebraic.hpp"
#include "b2/words.hpp"

namespace b2 {

// Closed rational enclosure [lo, hi] of a real number.
struct RealEnclosure {
  mpq_class lo, hi;
  bool exact() const { return lo == hi; }
  // Digits shared by both ends, truncated; never more than `digits`.
  std::string certified(int digits) const;
  // Outward-rounded decimal ends.
  std::pair<std::string, std::string> outward(int digits) const;
};

// Deterministic automaton for the factor language of U'_q. A state holds
// the pending comparisons against alpha (opened after a 0) and against
// reflect(alpha) (opened after a 1), as positions in alpha folded into the
// periodic part. Only states from which an admissible infinite path
// starts are kept.
struct UqAutomaton {
  EPSeq alpha;
  std::vector<std::array<int, 2>> next;  // -1: no edge
  std::vector<std::string> labels;
  int start = 0;
  std::size_t size() const { return next.size(); }
};

// alpha must be a quasi-greedy expansion (parry_check).
UqAutomaton build_automaton(const EPSeq& alpha);
UqAutomaton build_automaton(const AlgBase& q, std::size_t depth = 4096);

// counts[n] = number of words of length n accepted, n = 0..nmax.
std::vector<mpz_class> path_counts(const UqAutomaton& a, std::size_t nmax);

struct EntropyInfo {
  std::size_t states = 0;
  bool zero = false;     // spectral radius 1, entropy exactly 0
  ZPoly charpoly;        // dominant strongly connected component
  ZPoly lambda_poly;     // squarefree, unique root in [lambda_lo, lambda_hi]
  mpq_class lambda_lo, lambda_hi;
  RealEnclosure log_lambda;
  std::vector<std::pair<std::size_t, RealEnclosure>> finite_bounds;  // n -> log(#L_n)/n, n = 2^i
};

EntropyInfo entropy(const UqAutomaton& a, std::size_t nmax = 64, const mpq_class& width = mpq_class(1, 1000000000));
EntropyInfo entropy(const AlgBase& q, std::size_t nmax = 64);

// h_top(U'_q) / log q; exact [0,0] and [1,1] where certified.
RealEnclosure dim_U(const AlgBase& q, const mpq_class& tol = mpq_class(1, 1000000000));

struct LocalBound {
  RealEnclosure bound;     // 2 h(p) / log(q - delta), h(p) >= h(q + delta)
  EPSeq dominating_alpha;  // alpha(p), p >= q + delta
  bool exact_alpha;        // p == q + delta
  RealEnclosure entropy;   // h(p)
};

// Upper bound on dim_H(B2 within (q - delta, q + delta)); needs
// 0 < delta < (2 - q) / 3.
LocalBound b2_local_bound(const AlgBase& q, const mpq_class& delta, std::size_t kmax = 64);

// Dyadic a / 2^bits certified above q_KL by comparing its quasi-greedy
// digits with the Thue-Morse prefix.
AlgBase kl_upper_approximant(unsigned bits);

}  // namespace b2
