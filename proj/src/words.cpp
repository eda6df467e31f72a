#include "b2/words.hpp"

#include <algorithm>
#include <numeric>

#include "b2/error.hpp"

namespace b2 {

Word::Word(std::string digits) : d_(std::move(digits)) {
  for (char c : d_)
    if (c != '0' && c != '1') throw ParseError("word digits must be 0 or 1: '" + d_ + "'");
}

Word Word::repeat(char digit, std::size_t n) { return Word(std::string(n, digit)); }

Word Word::pow(std::size_t k) const {
  std::string out;
  out.reserve(d_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += d_;
  return Word(std::move(out), Trusted{});
}

Word reflect(const Word& w) {
  std::string s = w.str();
  for (char& c : s) c = c == '0' ? '1' : '0';
  return Word(std::move(s));
}

Word word_inc(const Word& w) {
  if (w.empty() || w.back() != 0) throw DomainError("word_inc needs a word ending in 0");
  return w.substr(0, w.size() - 1) + Word("1");
}

Word word_dec(const Word& w) {
  if (w.empty() || w.back() != 1) throw DomainError("word_dec needs a word ending in 1");
  return w.substr(0, w.size() - 1) + Word("0");
}

Order word_cmp(const Word& u, const Word& v) {
  const std::size_t n = std::max(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    int a = i < u.size() ? u[i] : 0;
    int b = i < v.size() ? v[i] : 0;
    if (a != b) return a < b ? Order::LT : Order::GT;
  }
  return Order::EQ;
}

namespace {

std::size_t primitive_root_len(const std::string& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = p[i] == p[i - d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

EPSeq::EPSeq(Word pre, Word period) {
  if (period.empty()) throw DomainError("EPSeq period must be nonempty");
  std::string per = period.str();
  per.resize(primitive_root_len(per));
  std::string p = pre.str();
  // Fold trailing preperiod digits into the period by rotation.
  while (!p.empty() && p.back() == per.back()) {
    p.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  pre_ = Word(std::move(p));
  per_ = Word(std::move(per));
}

EPSeq EPSeq::parse(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '"' && c != '\'') t += c;
  if (t.empty()) throw ParseError("empty sequence text");
  if (t.back() == '*') {
    if (t.size() < 2) throw ParseError("bad sequence text: " + std::string(text));
    char rep = t[t.size() - 2];
    return EPSeq(Word(t.substr(0, t.size() - 2)), Word(std::string(1, rep)));
  }
  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')' || t.find('(', open + 1) != std::string::npos)
    throw ParseError("sequence text must look like pre(per): " + std::string(text));
  std::string per = t.substr(open + 1, t.size() - open - 2);
  if (per.empty()) throw ParseError("empty period in: " + std::string(text));
  return EPSeq(Word(t.substr(0, open)), Word(per));
}

Word EPSeq::prefix(std::size_t n) const {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<char>('0' + at(i));
  return Word(std::move(s));
}

EPSeq reflect(const EPSeq& s) { return EPSeq(reflect(s.pre()), reflect(s.period())); }

Order lex_cmp(const EPSeq& a, const EPSeq& b) {
  const std::size_t pa = a.period().size(), pb = b.period().size();
  const std::size_t bound = std::max(a.pre().size(), b.pre().size()) + std::lcm(pa, pb) + std::max(pa, pb);
  for (std::size_t i = 0; i < bound; ++i) {
    int x = a.at(i), y = b.at(i);
    if (x != y) return x < y ? Order::LT : Order::GT;
  }
  return Order::EQ;
}

EPSeq shift(const EPSeq& s, std::size_t n) {
  const std::size_t k = s.pre().size();
  if (n <= k) return EPSeq(s.pre().substr(n), s.period());
  const std::size_t p = s.period().size();
  const std::size_t r = (n - k) % p;
  return EPSeq(Word(), s.period().substr(r) + s.period().substr(0, r));
}

EPSeq concat(const Word& w, const EPSeq& s) { return EPSeq(w + s.pre(), s.period()); }

Word thue_morse(std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 1; i <= n; ++i) s[i - 1] = static_cast<char>('0' + (__builtin_popcountll(i) & 1));
  return Word(std::move(s));
}

bool check_generator(const Word& w) {
  if (w.empty()) throw DomainError("generator must be nonempty");
  if (w.back() != 0) return false;
  const std::size_t m = w.size();
  const Word top = word_inc(w);
  for (std::size_t i = 1; i <= m; ++i) {
    const Word head = w.substr(0, i - 1);  // a_1 .. a_{i-1}
    const Word tail = w.substr(i - 1);     // a_i .. a_m
    if (word_cmp(reflect(tail + head), top) == Order::GT) return false;
    if (word_cmp(word_inc(tail) + reflect(head), top) == Order::GT) return false;
  }
  return true;
}

ComponentSpec::ComponentSpec(Word generator) : gen_(std::move(generator)) {
  if (gen_.empty() || !check_generator(gen_))
    throw DomainError("invalid component generator: '" + gen_.str() + "'");
  cache_.push_back(word_inc(gen_));
}

ComponentSpec::ComponentSpec(const ComponentSpec& o) : gen_(o.gen_) {
  std::lock_guard lock(o.mu_);
  cache_ = o.cache_;
}

ComponentSpec& ComponentSpec::operator=(const ComponentSpec& o) {
  if (this == &o) return *this;
  std::scoped_lock lock(mu_, o.mu_);
  gen_ = o.gen_;
  cache_ = o.cache_;
  return *this;
}

Word ComponentSpec::omega(std::size_t n) const {
  if (n > 24) throw DomainError("omega index too large");
  std::lock_guard lock(mu_);
  while (cache_.size() <= n) {
    const Word& w = cache_.back();
    cache_.push_back(w + word_inc(reflect(w)));
  }
  return cache_[n];
}

Word omega(const ComponentSpec& comp, std::size_t n) { return comp.omega(n); }

mpq_class eval(const EPSeq& s, const mpq_class& q) {
  if (q <= 1) throw DomainError("eval needs q > 1");
  const mpq_class inv = 1 / q;
  mpq_class total = 0, pw = 1;
  for (std::size_t i = 0; i < s.pre().size(); ++i) {
    pw *= inv;
    if (s.pre()[i]) total += pw;
  }
  mpq_class per = 0, pp = 1;
  for (std::size_t i = 0; i < s.period().size(); ++i) {
    pp *= inv;
    if (s.period()[i]) per += pp;
  }
  total += pw * per / (1 - pp);
  total.canonicalize();
  return total;
}

}  // namespace b2
