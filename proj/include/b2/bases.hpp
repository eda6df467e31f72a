#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "b2/algebraic.hpp"
#include "b2/words.hpp"

namespace b2 {

// First n digits of the quasi-greedy expansion alpha(q).
Word alpha_digits(const AlgBase& q, std::size_t n);

struct GreedyDigits {
  Word digits;
  bool finite;  // remainder reached exactly 0 after digits.size() digits
};
GreedyDigits beta_digits(const AlgBase& q, std::size_t n);

// alpha(q) as an EPSeq; UnsupportedBase if no period appears within depth.
EPSeq alpha_seq(const AlgBase& q, std::size_t depth = 4096);

// Quasi-greedy admissibility: shift after every 0 is <= the sequence.
bool parry_check(const EPSeq& s);

// The base q in (1, 2] whose quasi-greedy expansion of 1 is s.
AlgBase base_from_alpha(const EPSeq& s);

struct CountResult {
  bool exact;
  mpz_class k;
  std::string str() const { return (exact ? "Exact(" : "AtLeast(") + k.get_str() + ")"; }
};
// Number of q-expansions of x in Q(q), by exploring distinct remainders.
CountResult count_expansions(const FieldElem& x, const AlgBase& q, std::size_t cap, std::size_t depth);

// "p/q", integers and finite decimals, all exact.
mpq_class parse_rational(std::string_view text);
// "poly:[c0,..,cd]@[lo,hi]" or "alpha:SEQ".
AlgBase parse_base_spec(std::string_view text);

}  // namespace b2
