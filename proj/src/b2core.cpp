#include "b2/b2core.hpp"

#include <sstream>

#include "b2/classify.hpp"
#include "b2/error.hpp"

namespace b2 {

std::string ReprVector::str() const {
  if (is_inf()) return "(inf)";
  auto list = [](const std::vector<unsigned>& v, bool inf) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    if (inf) os << (v.empty() ? "" : ",") << "inf";
    os << ')';
    return os.str();
  };
  return "k=" + list(k, false) + ";s=" + list(s, false) + ";j=" + list(j, true);
}

namespace {

const Word kOne("1");

mpq_class one_over_qm1(const mpq_class& q) { return mpq_class(1) / (q - 1); }

}  // namespace

mpq_class f_eval(const EPSeq& c, const EPSeq& d, const mpq_class& q) {
  if (q <= 1 || q > 2) throw DomainError("f_eval needs q in (1, 2]");
  return eval(concat(kOne, c), q) + eval(concat(kOne, d), q) - one_over_qm1(q);
}

FieldElem f_eval(const EPSeq& c, const EPSeq& d, const AlgBase& q) {
  if (q.cmp(mpq_class(1)) <= 0 || q.cmp(mpq_class(2)) > 0) throw DomainError("f_eval needs q in (1, 2]");
  const FieldElem x = FieldElem::gen(q);
  return eval(concat(kOne, c), q) + eval(concat(kOne, d), q) - (x - mpq_class(1)).inverse();
}

ZPoly f_numerator(const EPSeq& c, const EPSeq& d) {
  // f * x D_c D_d (x - 1), with (1s)_x = (D + N) / (x D).
  const SeriesForm a = series_form(c), b = series_form(d);
  const ZPoly x{0, 1}, xm1{-1, 1};
  const ZPoly dd = a.den * b.den;
  return (dd * mpz_class(2) + a.num * b.den + b.num * a.den) * xm1 - x * dd;
}

ZPoly f_minpoly(const EPSeq& c, const EPSeq& d) {
  ZPoly p = strip_x(f_numerator(c, d));
  p = strip_factor(p, ZPoly{-1, 1});
  p = strip_cyclotomic(p, {static_cast<unsigned>(c.period().size()), static_cast<unsigned>(d.period().size())});
  return to_monic(p);
}

int f_sign(const EPSeq& c, const EPSeq& d, const AlgBase& q) { return q.sign_of(f_numerator(c, d)); }

MonoCase monotone_case(const EPSeq& c, const EPSeq& d) {
  static const EPSeq t1(Word("01"), Word("0")), t2(Word("001"), Word("0")), t3(Word("0001"), Word("0"));
  auto ge = [](const EPSeq& a, const EPSeq& b) { return lex_cmp(a, b) != Order::LT; };
  if (ge(c, t1) || ge(d, t1)) return MonoCase::PositiveI;
  if ((ge(c, t3) && ge(d, t2)) || (ge(c, t2) && ge(d, t3))) return MonoCase::PositiveII;
  return MonoCase::IncreasingIII;
}

const char* mono_case_name(MonoCase m) {
  switch (m) {
    case MonoCase::PositiveI: return "PositiveI";
    case MonoCase::PositiveII: return "PositiveII";
    case MonoCase::IncreasingIII: return "IncreasingIII";
  }
  return "?";
}

const AlgBase& q_f_const() {
  static const AlgBase q(ZPoly{-1, 1, -2, 1}, mpq_class(175, 100), mpq_class(176, 100));
  return q;
}

std::vector<AlgBase> f_roots(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi) {
  if (lo > hi) throw DomainError("empty bracket");
  if (lo.cmp(mpq_class(1)) < 0 || hi.cmp(mpq_class(2)) > 0) throw DomainError("bracket must lie in [1, 2]");
  const ZPoly n = f_numerator(c, d);
  std::vector<AlgBase> out;
  for (const AlgBase& r : real_roots(f_minpoly(c, d), lo.interval().first, hi.interval().second)) {
    if (r < lo || r > hi) continue;
    if (!r.is_root_of(n)) throw DomainError("internal: candidate root fails the residual check");
    out.push_back(r);
  }
  return out;
}

std::optional<AlgBase> solve_qcd(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi) {
  if (lo > hi) throw DomainError("empty bracket");
  if (hi.cmp(mpq_class(2)) > 0) throw DomainError("bracket must lie below 2");
  if (lo < q_f_const()) {
    // Below q_f the monotone regime does not apply; isolate all roots.
    auto roots = f_roots(c, d, lo, hi);
    if (roots.empty()) return std::nullopt;
    if (roots.size() > 1) throw DomainError("bracket contains " + std::to_string(roots.size()) + " roots of f");
    return roots[0];
  }
  const MonoCase mc = monotone_case(c, d);
  if (mc != MonoCase::IncreasingIII) throw NoRootByCase(std::string("f > 0 on [q_f, 2] (") + mono_case_name(mc) + ")");
  const ZPoly n = f_numerator(c, d);
  const int sl = lo.sign_of(n), sh = hi.sign_of(n);
  if (sl == 0) return lo;
  if (sh == 0) return hi;
  if (sl > 0 || sh < 0) return std::nullopt;
  auto roots = f_roots(c, d, lo, hi);
  if (roots.size() != 1) throw DomainError("internal: increasing f with " + std::to_string(roots.size()) + " roots");
  return roots[0];
}

B2Witness make_witness(const EPSeq& c, const EPSeq& d, const AlgBase& root) {
  const bool adm = in_A_prime(c, root) && in_A_prime(d, root);
  return B2Witness{c, d, root, f_minpoly(c, d), adm, {}, std::nullopt};
}

std::optional<B2Witness> certify_b2(const EPSeq& c, const EPSeq& d, const AlgBase& lo, const AlgBase& hi) {
  auto r = solve_qcd(c, d, lo, hi);
  if (!r) return std::nullopt;
  return make_witness(c, d, *r);
}

namespace {

// reflect(s) <= shift^n s <= s for every n >= 1.
bool in_V_prime(const EPSeq& s) {
  const EPSeq rs = reflect(s);
  for (std::size_t n = 1; n <= s.window(); ++n) {
    const EPSeq t = shift(s, n);
    if (lex_cmp(t, s) == Order::GT || lex_cmp(rs, t) == Order::GT) return false;
  }
  return true;
}

}  // namespace

VWitness witness_for_V_base(const Word& gen) {
  if (gen.size() < 2) throw DomainError("generator needs length at least 2");
  if (gen.back() != 0) throw DomainError("generator must end with 0");
  const Word ap = word_inc(gen);
  const EPSeq s = EPSeq::periodic(gen), alpha = EPSeq::periodic(ap + reflect(ap));
  if (!in_V_prime(s) || !in_V_prime(alpha)) throw DomainError("generator violates the V' conditions: " + gen.str());
  EPSeq c(reflect(ap), gen);
  EPSeq d(Word::repeat('0', 2 * gen.size()), reflect(gen));
  return {c, d, alpha};
}

std::pair<EPSeq, EPSeq> prop62_pair(const ComponentSpec& comp, unsigned n) {
  if (n < 2) throw DomainError("the pair construction needs n >= 2");
  const Word w0 = comp.omega(0), w0m = word_dec(w0), r0 = reflect(w0);
  const std::size_t zeros = (std::size_t{1} << n) * comp.m();
  EPSeq c(Word::repeat('0', zeros) + r0 + w0m, w0 + r0);
  Word pre = r0 + w0m;
  for (unsigned i = 0; i + 3 <= n; ++i) {
    const Word wi = comp.omega(i);
    pre += wi + reflect(wi);
  }
  const Word wl = comp.omega(n - 2);
  EPSeq d(pre, wl + reflect(wl));
  return {c, d};
}

std::pair<ReprVector, ReprVector> prop62_vectors(unsigned n) {
  if (n < 2) throw DomainError("the pair construction needs n >= 2");
  ReprVector a{{0}, {}, {(1u << n) + 2}};
  ReprVector b;
  for (unsigned i = 0; i + 1 < n; ++i) {
    b.k.push_back(i);
    b.j.push_back(i == 0 ? 2 : 1);
    if (i) b.s.push_back(0);
  }
  return {a, b};
}

EPSeq udiff_generate(const ComponentSpec& comp, const Word& omega, const ReprVector& v) {
  const std::size_t m = v.m();
  const Word w0m = comp.generator();
  if (m == 0) {
    if (!v.s.empty() || !v.j.empty()) throw DomainError("vector (inf) takes no s or j entries");
    return EPSeq(omega, w0m);
  }
  if (v.j.size() != m || v.s.size() != m - 1) throw DomainError("malformed vector: need m j-entries and m-1 s-entries");
  for (std::size_t i = 1; i < m; ++i)
    if (v.k[i] <= v.k[i - 1]) throw DomainError("k must be strictly increasing");
  for (unsigned b : v.s)
    if (b > 1) throw DomainError("s entries must be 0 or 1");
  if (v.k.back() > 20) throw DomainError("k entries above 20 are not supported");
  if (omega.empty() && v.j[0] == 0) throw DomainError("empty initial word needs j0 >= 1");
  Word pre = omega + w0m.pow(v.j[0]);
  for (std::size_t r = 0; r + 1 < m; ++r) {
    const Word wk = comp.omega(v.k[r]);
    pre += (wk + reflect(wk)).pow(v.j[r + 1]);
    pre += (wk + reflect(comp.omega(v.k[r + 1]))).pow(v.s[r]);
  }
  const Word wl = comp.omega(v.k.back());
  return EPSeq(pre, wl + reflect(wl));
}

}  // namespace b2
