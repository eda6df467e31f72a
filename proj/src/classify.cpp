#include "b2/classify.hpp"

#include "b2/bases.hpp"
#include "b2/error.hpp"

namespace b2 {

Order cmp_alpha(const EPSeq& s, const AlgBase& q, std::size_t depth) {
  for (std::size_t i = 0;; ++i) {
    if (auto a = q.alpha_seq(i + 1)) return lex_cmp(s, *a);
    if (i >= depth) throw UnsupportedBase("comparison with alpha(q) undecided within " + std::to_string(depth) + " digits");
    int x = s.at(i), y = q.alpha_digit(i);
    if (x != y) return x < y ? Order::LT : Order::GT;
  }
}

namespace {

bool check_shifts(const EPSeq& s, const AlgBase& q, std::size_t depth, bool strict) {
  for (std::size_t n = 1; n <= s.window(); ++n) {
    EPSeq t = shift(s, n);
    if (s.at(n - 1) == 1) t = reflect(t);
    Order o = cmp_alpha(t, q, depth);
    if (o == Order::GT || (strict && o == Order::EQ)) return false;
  }
  return true;
}

}  // namespace

bool is_univoque_seq(const EPSeq& s, const AlgBase& q, std::size_t depth) { return check_shifts(s, q, depth, true); }

bool in_Vq_seq(const EPSeq& s, const AlgBase& q, std::size_t depth) { return check_shifts(s, q, depth, false); }

bool in_A_prime(const EPSeq& s, const AlgBase& q, std::size_t depth) {
  return s.at(0) == 0 && is_univoque_seq(s, q, depth);
}

BaseClass classify_base(const AlgBase& q, std::size_t depth) {
  const EPSeq a = alpha_seq(q, depth);
  BaseClass c{BaseClassTag::OutsideV, true, true, true, true, 0, 0, a.window()};
  if (q.cmp(mpq_class(2)) == 0) {
    c.tag = BaseClassTag::InU;
    return c;
  }
  const EPSeq ra = reflect(a);
  for (std::size_t n = 1; n <= a.window(); ++n) {
    const EPSeq t = shift(a, n);
    Order up = lex_cmp(t, a), lo = lex_cmp(ra, t);
    if (up != Order::LT) {
      c.upper_strict = false;
      if (!c.first_upper_fail) c.first_upper_fail = n;
    }
    if (up == Order::GT) c.upper_weak = false;
    if (lo != Order::LT) {
      c.lower_strict = false;
      if (!c.first_lower_fail) c.first_lower_fail = n;
    }
    if (lo == Order::GT) c.lower_weak = false;
  }
  if (c.lower_strict && c.upper_strict) c.tag = BaseClassTag::InU;
  else if (c.lower_strict && c.upper_weak) c.tag = BaseClassTag::InUbarMinusU;
  else if (c.lower_weak && c.upper_weak) c.tag = BaseClassTag::InVMinusUbar;
  else c.tag = BaseClassTag::OutsideV;
  return c;
}

const char* tag_name(BaseClassTag t) {
  switch (t) {
    case BaseClassTag::InU: return "U";
    case BaseClassTag::InUbarMinusU: return "Ubar\\U";
    case BaseClassTag::InVMinusUbar: return "V\\Ubar";
    case BaseClassTag::OutsideV: return "not-V";
  }
  return "?";
}

}  // namespace b2
