#pragma once
// Independent reference implementations used as test oracles. They work on
// plain digit strings and long doubles, never on the library's canonical
// forms or exact arithmetic.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>

#include "b2/words.hpp"

namespace oracle {

inline std::string digits(const b2::EPSeq& s, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += char('0' + s.at(i));
  return out;
}

// Digits of pre(per)^inf built straight from strings.
inline std::string expand(const std::string& pre, const std::string& per, std::size_t n) {
  std::string out = pre;
  while (out.size() < n) out += per;
  return out.substr(0, n);
}

// Sign of a - b over the first n digits (0 when they agree there).
inline int prefix_cmp(const b2::EPSeq& a, const b2::EPSeq& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? -1 : 1;
  }
  return 0;
}

inline long double value(const std::string& pre, const std::string& per, long double q, int terms = 4000) {
  long double v = 0, w = 1;
  std::string d = expand(pre, per, terms);
  for (int i = 0; i < terms; ++i) {
    w /= q;
    if (d[i] == '1') v += w;
  }
  return v;
}

inline long double value(const b2::EPSeq& s, long double q, int terms = 4000) {
  return value(s.pre().str(), s.period().str(), q, terms);
}

// f(q) = (1c)_q + (1d)_q - 1/(q-1) by direct summation.
inline long double f_value(const b2::EPSeq& c, const b2::EPSeq& d, long double q) {
  return 2 / q + value(c, q) / q + value(d, q) / q - 1 / (q - 1);
}

inline std::string random_word(std::mt19937& g, std::size_t lo, std::size_t hi) {
  std::uniform_int_distribution<std::size_t> len(lo, hi);
  std::bernoulli_distribution bit(0.5);
  std::string w;
  for (std::size_t n = len(g); n > 0; --n) w += bit(g) ? '1' : '0';
  return w;
}

inline b2::EPSeq random_seq(std::mt19937& g, std::size_t max_pre = 6, std::size_t max_per = 6) {
  return b2::EPSeq(b2::Word(random_word(g, 0, max_pre)), b2::Word(random_word(g, 1, max_per)));
}

// Univoque conditions checked on a long prefix, given alpha as a sequence.
// Equality over the whole compared range counts as "not strictly below",
// which is exact once the range exceeds both windows by a period multiple.
inline bool univoque_window(const b2::EPSeq& s, const b2::EPSeq& alpha) {
  const std::size_t span = 4 * (s.window() + alpha.window()) + 16;
  const std::string a = digits(alpha, span);
  const std::string x = digits(s, 2 * span);
  for (std::size_t n = 0; n < span; ++n) {
    int strict = 0;
    for (std::size_t i = 0; i < span && strict == 0; ++i) {
      int cd = x[n + 1 + i] - '0';
      if (x[n] == '1') cd = 1 - cd;
      if (cd != a[i] - '0') strict = cd < a[i] - '0' ? -1 : 1;
    }
    if (strict >= 0) return false;
  }
  return true;
}

inline bool thue_morse_digit(std::size_t i) { return __builtin_popcountll(i) % 2 == 1; }

}  // namespace oracle
