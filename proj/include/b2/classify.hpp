#pragma once

#include <cstddef>
#include <string>

#include "b2/algebraic.hpp"
#include "b2/words.hpp"

namespace b2 {

// Lexicographic comparison of s with alpha(q). Exact when alpha(q) is
// eventually periodic; otherwise digit by digit up to `depth` digits
// (UnsupportedBase beyond that).
Order cmp_alpha(const EPSeq& s, const AlgBase& q, std::size_t depth = 4096);

// Strict conditions: sequence of a point with a unique expansion.
bool is_univoque_seq(const EPSeq& s, const AlgBase& q, std::size_t depth = 4096);
// Weak conditions.
bool in_Vq_seq(const EPSeq& s, const AlgBase& q, std::size_t depth = 4096);
// Univoque and starting with 0.
bool in_A_prime(const EPSeq& s, const AlgBase& q, std::size_t depth = 4096);

enum class BaseClassTag { InU, InUbarMinusU, InVMinusUbar, OutsideV };

struct BaseClass {
  BaseClassTag tag;
  bool lower_strict, lower_weak, upper_strict, upper_weak;
  std::size_t first_lower_fail;  // 0 when none
  std::size_t first_upper_fail;
  std::size_t shifts_checked;
};

// Requires an eventually periodic alpha(q).
BaseClass classify_base(const AlgBase& q, std::size_t depth = 4096);
const char* tag_name(BaseClassTag t);

}  // namespace b2
