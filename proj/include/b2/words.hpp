#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

namespace b2 {

// Finite 0/1 word. Stored as a string of '0'/'1' characters.
class Word {
 public:
  Word() = default;
  explicit Word(std::string digits);

  static Word repeat(char digit, std::size_t n);

  std::size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }
  int operator[](std::size_t i) const { return d_[i] - '0'; }
  int back() const { return d_.back() - '0'; }
  const std::string& str() const { return d_; }

  Word operator+(const Word& o) const { return Word(d_ + o.d_, Trusted{}); }
  Word& operator+=(const Word& o) {
    d_ += o.d_;
    return *this;
  }
  Word pow(std::size_t k) const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(d_.substr(pos, len), Trusted{});
  }
  bool contains(const Word& factor) const { return d_.find(factor.d_) != std::string::npos; }

  bool operator==(const Word&) const = default;
  // Plain string order; used for containers only. Use word_cmp for the
  // lexicographic order on words.
  auto operator<=>(const Word& o) const { return d_ <=> o.d_; }

 private:
  struct Trusted {};
  Word(std::string digits, Trusted) : d_(std::move(digits)) {}
  std::string d_;
};

enum class Order { LT = -1, EQ = 0, GT = 1 };

Word reflect(const Word& w);
// Last digit 0 -> 1. Throws DomainError on empty word or last digit 1.
Word word_inc(const Word& w);
// Last digit 1 -> 0. Throws DomainError on empty word or last digit 0.
Word word_dec(const Word& w);
// Word order: u < v iff u0^inf < v0^inf.
Order word_cmp(const Word& u, const Word& v);

// Eventually periodic sequence pre (period)^inf, kept in canonical form:
// primitive period and shortest preperiod.
class EPSeq {
 public:
  EPSeq() : EPSeq(Word(), Word("0")) {}
  EPSeq(Word pre, Word period);

  static EPSeq periodic(Word period) { return EPSeq(Word(), std::move(period)); }
  static EPSeq zeros() { return EPSeq(); }
  // Text form "pre(per)"; "(per)"; "0*" for 0^inf; "w0*" for w0^inf.
  static EPSeq parse(std::string_view text);

  const Word& pre() const { return pre_; }
  const Word& period() const { return per_; }
  std::size_t window() const { return pre_.size() + per_.size(); }

  int at(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  Word prefix(std::size_t n) const;
  bool is_zero_tail() const { return per_.str() == "0"; }
  bool is_one_tail() const { return per_.str() == "1"; }

  std::string str() const { return pre_.str() + "(" + per_.str() + ")"; }

  bool operator==(const EPSeq&) const = default;
  // Structural order for containers; lexicographic order is lex_cmp.
  auto operator<=>(const EPSeq& o) const {
    if (auto c = pre_ <=> o.pre_; c != 0) return c;
    return per_ <=> o.per_;
  }

 private:
  Word pre_;
  Word per_;
};

EPSeq reflect(const EPSeq& s);
Order lex_cmp(const EPSeq& a, const EPSeq& b);
EPSeq shift(const EPSeq& s, std::size_t n);
EPSeq concat(const Word& w, const EPSeq& s);

// tau_1 ... tau_n of the truncated Thue-Morse sequence.
Word thue_morse(std::size_t n);

// Both chains of the generator inequalities for all 0 < i <= m.
bool check_generator(const Word& w);

// Connected component generated by a word a_1..a_m (omega_0 = a_1..a_m^+).
class ComponentSpec {
 public:
  explicit ComponentSpec(Word generator);
  ComponentSpec(const ComponentSpec& o);
  ComponentSpec& operator=(const ComponentSpec& o);

  const Word& generator() const { return gen_; }
  std::size_t m() const { return gen_.size(); }
  Word omega(std::size_t n) const;

 private:
  Word gen_;
  mutable std::mutex mu_;
  mutable std::vector<Word> cache_;
};

Word omega(const ComponentSpec& comp, std::size_t n);

// Exact value sum s_i q^-i for rational q > 1.
mpq_class eval(const EPSeq& s, const mpq_class& q);

}  // namespace b2
