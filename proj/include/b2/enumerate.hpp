#pragma once

#include <functional>
#include <vector>

#include "b2/algebraic.hpp"
#include "b2/b2core.hpp"
#include "b2/repr.hpp"
#include "b2/words.hpp"

namespace b2 {

struct LadderEntry {
  unsigned n;
  AlgBase base;     // q_n
  EPSeq alpha;      // (omega_n^-)^inf
  Word beta_word;   // omega_n
};

// Entries n = 1..N.
std::vector<LadderEntry> qn_ladder(const ComponentSpec& comp, unsigned N);
// q_n for the component (1, q_KL), cached; n >= 1.
const AlgBase& kl_base(unsigned n);

// initial (omega_0^-)^j0 (w_k1 ~w_k1)^j1 ... (w_km ~w_km)^inf; with an
// empty initial word and generator 0 this is 0^j0 (...).
EPSeq repr_to_seq(const ReprVector& v, const ComponentSpec& comp, const Word& initial = Word());

// All vectors with k entries < n, j0 in [1, jmax] and j_r in [0, jmax].
// Ordered by m + sum(j), then (k, s, j) lexicographically.
std::vector<ReprVector> enum_reprs(unsigned n, unsigned jmax);
void for_each_repr(unsigned n, unsigned jmax, const std::function<void(const ReprVector&)>& fn);

// Roots of f in (q_n, q_{n+1}] over pairs of sequences from enum_reprs,
// admissible at the root, one witness per root, ascending.
std::vector<B2Witness> enum_B2(unsigned n, unsigned jmax);

// 2n - (k_m + 1) - (k~_m + 1), maximised over the representations in w and
// floored at 0.
int derived_order_bound(const B2Witness& w, unsigned n);

struct DerivedMin {
  AlgBase root;
  int order;          // certified interval-relative order (>= requested)
  unsigned interval;  // n with root in [q_n, q_{n+1}]
  bool left_endpoint; // root == q_n, order taken from pairs valid on (q_n, q_{n+1}]
  EPSeq c, d;
  ReprVector vc, vd;
};

// Smallest base found with derived order >= j over intervals n <= nmax.
// NotFoundWithinBounds if none.
DerivedMin min_derived_info(unsigned j, unsigned jmax, unsigned nmax);
AlgBase min_derived(unsigned j, unsigned jmax, unsigned nmax);

}  // namespace b2
