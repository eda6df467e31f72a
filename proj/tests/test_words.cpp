#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "b2/error.hpp"
#include "b2/words.hpp"
#include "oracle.hpp"

using namespace b2;

TEST_CASE("word reflection and increments") {
  CHECK(reflect(Word("1101")).str() == "0010");
  CHECK(word_inc(Word("1100")).str() == "1101");
  CHECK(word_dec(Word("1101")).str() == "1100");
  CHECK_THROWS_AS(word_inc(Word("1")), DomainError);
  CHECK_THROWS_AS(word_dec(Word("10")), DomainError);
  CHECK_THROWS_AS(word_dec(Word()), DomainError);
  CHECK_THROWS_AS(Word("012"), std::exception);
  CHECK(Word("10").pow(3).str() == "101010");
}

TEST_CASE("word order pads with zeros") {
  CHECK(word_cmp(Word("1"), Word("10")) == Order::EQ);
  CHECK(word_cmp(Word("01"), Word("1")) == Order::LT);
  CHECK(word_cmp(Word("11"), Word("101")) == Order::GT);
  CHECK(word_cmp(Word(""), Word("000")) == Order::EQ);
}

TEST_CASE("canonical form keeps the digit stream") {
  std::mt19937 g(7);
  for (int t = 0; t < 400; ++t) {
    const std::string pre = oracle::random_word(g, 0, 7), per = oracle::random_word(g, 1, 7);
    const EPSeq s{Word(pre), Word(per)};
    CHECK(oracle::digits(s, 80) == oracle::expand(pre, per, 80));
    CHECK(s.period().size() <= per.size());
    CHECK(s.pre().size() <= pre.size());
    // primitive period
    const std::string& p = s.period().str();
    for (std::size_t d = 1; d < p.size(); ++d) {
      if (p.size() % d == 0) CHECK(p != oracle::expand("", p.substr(0, d), p.size()));
    }
  }
  CHECK(EPSeq(Word("0010"), Word("10")).str() == "0(01)");
  CHECK(EPSeq(Word(""), Word("1010")).str() == "(10)");
}

TEST_CASE("parsing and printing") {
  CHECK(EPSeq::parse("00(10)").str() == "0(01)");
  CHECK(EPSeq::parse("0*") == EPSeq::zeros());
  CHECK(EPSeq::parse("(0)") == EPSeq::zeros());
  CHECK(EPSeq::parse("1010*").str() == "101(0)");
  CHECK(EPSeq::parse("(1100)").str() == "(1100)");
  CHECK_THROWS_AS(EPSeq::parse("0"), ParseError);
  CHECK_THROWS_AS(EPSeq::parse("0(2)"), ParseError);
  CHECK_THROWS_AS(EPSeq::parse("0()"), ParseError);
  CHECK_THROWS_AS(EPSeq::parse("(10"), ParseError);
  std::mt19937 g(11);
  for (int t = 0; t < 100; ++t) {
    const EPSeq s = oracle::random_seq(g);
    CHECK(EPSeq::parse(s.str()) == s);
  }
}

TEST_CASE("lex_cmp agrees with a long digit comparison") {
  std::mt19937 g(3);
  for (int t = 0; t < 1000; ++t) {
    const EPSeq a = oracle::random_seq(g, 5, 5), b = oracle::random_seq(g, 5, 5);
    const int want = oracle::prefix_cmp(a, b, 200);
    CHECK(static_cast<int>(lex_cmp(a, b)) == want);
    CHECK((want == 0) == (a == b));
  }
}

TEST_CASE("reflection is an involution and reverses order") {
  std::mt19937 g(5);
  for (int t = 0; t < 300; ++t) {
    const EPSeq a = oracle::random_seq(g), b = oracle::random_seq(g);
    CHECK(reflect(reflect(a)) == a);
    CHECK(static_cast<int>(lex_cmp(reflect(a), reflect(b))) == -static_cast<int>(lex_cmp(a, b)));
    for (std::size_t i = 0; i < 30; ++i) CHECK(reflect(a).at(i) == 1 - a.at(i));
  }
}

TEST_CASE("shift and concat act on digits") {
  std::mt19937 g(9);
  for (int t = 0; t < 200; ++t) {
    const EPSeq a = oracle::random_seq(g);
    const std::size_t n = t % 9;
    CHECK(oracle::digits(shift(a, n), 40) == oracle::digits(a, 40 + n).substr(n));
    const std::string w = oracle::random_word(g, 0, 5);
    CHECK(oracle::digits(concat(Word(w), a), 40) == (w + oracle::digits(a, 40)).substr(0, 40));
  }
}

TEST_CASE("Thue-Morse prefix and the omega recursion") {
  const Word tm = thue_morse(64);
  for (std::size_t i = 1; i <= 64; ++i) CHECK(tm[i - 1] == int(oracle::thue_morse_digit(i)));
  CHECK(thue_morse(16).str() == "1101001100101101");

  const ComponentSpec c0{Word("0")};
  CHECK(c0.omega(0).str() == "1");
  CHECK(c0.omega(1).str() == "11");
  CHECK(c0.omega(2).str() == "1101");
  CHECK(c0.omega(3).str() == "11010011");
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(c0.omega(n) == thue_morse(std::size_t(1) << n));
    const Word w = c0.omega(n + 1);
    // omega_{n+1} = omega_n reflect(omega_n)^+
    CHECK(w == c0.omega(n) + word_inc(reflect(c0.omega(n))));
    CHECK(w.substr(0, c0.omega(n).size()) == c0.omega(n));
  }
  const ComponentSpec c10{Word("10")};
  CHECK(c10.omega(0).str() == "11");
  // omega_1 = 11 reflect(11)^+ = 1101
  CHECK(c10.omega(1).str() == "1101");
  CHECK(omega(c10, 2).str() == "11010011");
}

namespace {

int padded_cmp(std::string u, std::string v) {
  const std::size_t n = std::max(u.size(), v.size());
  u.resize(n, '0');
  v.resize(n, '0');
  return u < v ? -1 : (u == v ? 0 : 1);
}

std::string flip(std::string u) {
  for (char& c : u) c = c == '0' ? '1' : '0';
  return u;
}

bool generator_oracle(const std::string& a) {
  if (a.back() != '0') return false;
  std::string top = a;
  top.back() = '1';
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const std::string head = a.substr(0, i - 1), tail = a.substr(i - 1);
    std::string tail_inc = tail;
    tail_inc.back() = '1';
    if (padded_cmp(flip(tail + head), top) > 0) return false;
    if (padded_cmp(tail_inc + flip(head), top) > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generator conditions") {
  CHECK(check_generator(Word("0")));
  CHECK(check_generator(Word("10")));
  CHECK_FALSE(check_generator(Word("01")));
  int valid = 0;
  for (std::size_t len = 1; len <= 9; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      CHECK(check_generator(Word(w)) == generator_oracle(w));
      valid += generator_oracle(w);
    }
  }
  CHECK(valid > 3);
}

TEST_CASE("exact rational evaluation") {
  CHECK(eval(EPSeq::periodic(Word("10")), mpq_class(2)) == mpq_class(2, 3));
  CHECK(eval(EPSeq::zeros(), mpq_class(3, 2)) == 0);
  for (const mpq_class q : {mpq_class(3, 2), mpq_class(7, 4), mpq_class(2)}) {
    CHECK(eval(EPSeq::periodic(Word("1")), q) == 1 / (q - 1));
  }
  std::mt19937 g(13);
  for (int t = 0; t < 200; ++t) {
    const EPSeq s = oracle::random_seq(g);
    mpq_class q(11 + t % 9, 10);
    q.canonicalize();
    const long double want = oracle::value(s, q.get_d());
    CHECK(std::fabs(eval(s, q).get_d() - double(want)) < 1e-12);
    // shifting multiplies by q^n and drops the leading digits
    const std::size_t n = t % 5;
    mpq_class head = 0, qn = 1;
    for (std::size_t i = 0; i < n; ++i) {
      qn *= q;
      head += mpq_class(s.at(i)) / qn;
    }
    CHECK(eval(shift(s, n), q) == qn * eval(s, q) - qn * head);
  }
}
