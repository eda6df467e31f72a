// Acceptance run: one PASS/FAIL line per criterion, detail lines start with '#'.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "b2/b2core.hpp"
#include "b2/bases.hpp"
#include "b2/classify.hpp"
#include "b2/dimension.hpp"
#include "b2/enumerate.hpp"
#include "b2/error.hpp"
#include "language_oracle.hpp"
#include "oracle.hpp"

using namespace b2;

namespace {

// Pinned tolerances and time limits.
constexpr double kTolValue = 1e-5;
constexpr double kTolKL = 1e-4;
constexpr double kLimit1 = 10, kLimit2 = 10, kLimit3 = 5, kLimit4 = 1, kLimit5 = 1, kLimit6 = 5, kLimit7 = 10;
constexpr double kLimit8 = 120, kLimit9 = 60, kLimit10 = 120, kLimit11 = 300;

const ZPoly kQsPoly{-1, -1, -2, 0, 1};
const ZPoly kQfPoly{-1, 1, -2, 1};

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < limit, "time limit " + std::to_string(limit) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
  std::fflush(stdout);
}

const ComponentSpec& c0() {
  static const ComponentSpec c{Word("0")};
  return c;
}

mpq_class rat(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

bool near(const AlgBase& q, double v, double tol) { return std::fabs(double(q.approx()) - v) <= tol; }

}  // namespace

int main() {
  criterion(1, "smallest element q_s", kLimit1, [](Outcome& o) {
    const auto ws = enum_B2(1, 6);
    o.require(!ws.empty(), "enumeration empty");
    if (ws.empty()) return;
    o.require(ws[0].root.minpoly() == kQsPoly, "minimal polynomial");
    o.require(near(ws[0].root, 1.71064, kTolValue), "value");
    const auto r = solve_qcd(EPSeq::parse("00(10)"), EPSeq::parse("0000(10)"), AlgBase::rational(mpq_class(17, 10)),
                             q_f_const());
    o.require(r && *r == ws[0].root, "root of f below q_f");
    std::printf("# q_s = %s minpoly %s\n", ws[0].root.decimal(12).c_str(), ws[0].root.minpoly().json().c_str());
  });

  criterion(2, "second element q_f", kLimit2, [](Outcome& o) {
    const auto ws = enum_B2(1, 6);
    o.require(ws.size() == 2, "two bases in (q_1, q_2]");
    if (ws.size() < 2) return;
    o.require(ws[1].root.minpoly() == kQfPoly, "minimal polynomial");
    o.require(near(ws[1].root, 1.75488, kTolValue), "value");
    o.require(ws[1].root == kl_base(2), "equals q_2");
    std::printf("# q_f = %s\n", ws[1].root.decimal(12).c_str());
  });

  criterion(3, "ladder values", kLimit3, [](Outcome& o) {
    const double want[] = {1.61803, 1.75488, 1.78460, 1.78721};
    const auto l = qn_ladder(c0(), 4);
    o.require(l.size() == 4, "four entries");
    for (std::size_t i = 0; i < l.size() && i < 4; ++i)
      o.require(near(l[i].base, want[i], kTolValue), "q_" + std::to_string(i + 1));
    const AlgBase q8 = kl_base(8);
    o.require(near(q8, 1.78723, kTolKL), "q_8");
    std::printf("# q_8 = %s\n", q8.decimal(10).c_str());
  });

  criterion(4, "Thue-Morse identity", kLimit4, [](Outcome& o) {
    const Word w = c0().omega(4);
    o.require(w == thue_morse(16), "thue_morse(16)");
    o.require(w.str() == "1101001100101101", "literal");
  });

  criterion(5, "quasi-greedy constants", kLimit5, [](Outcome& o) {
    const AlgBase phi(ZPoly{-1, -1, 1}, mpq_class(3, 2), mpq_class(2));
    o.require(alpha_digits(phi, 10).str() == "1010101010", "phi");
    o.require(alpha_digits(q_f_const(), 12).str() == "110011001100", "q_f");
  });

  criterion(6, "two expansions at q_s", kLimit6, [](Outcome& o) {
    const AlgBase qs(kQsPoly, mpq_class(17, 10), mpq_class(9, 5));
    const FieldElem x = eval(EPSeq::parse("100(10)"), qs);
    const CountResult r = count_expansions(x, qs, 3, 256);
    o.require(r.str() == "Exact(2)", "count " + r.str());
  });

  criterion(7, "sign change of the pair construction", kLimit7, [](Outcome& o) {
    for (unsigned n = 2; n <= 4; ++n) {
      auto [c, d] = prop62_pair(c0(), n);
      o.require(f_sign(c, d, kl_base(n)) < 0, "negative at q_" + std::to_string(n));
      o.require(f_sign(c, d, kl_base(n + 1)) > 0, "positive at q_" + std::to_string(n + 1));
    }
  });

  criterion(8, "derived-order bracket", kLimit8, [](Outcome& o) {
    const AlgBase m2 = min_derived(2, 6, 5);
    o.require(m2 == q_f_const(), "j = 2 gives q_f");
    const AlgBase m4 = min_derived(4, 6, 5);
    o.require(m4 >= kl_base(3) && m4 < kl_base(5), "j = 4 inside [q_3, q_5)");
    std::printf("# min order 2: %s, min order 4: %s\n", m2.decimal(10).c_str(), m4.decimal(10).c_str());
  });

  criterion(9, "dimension endpoints and automaton counts", kLimit9, [](Outcome& o) {
    const RealEnclosure d2 = dim_U(AlgBase::rational(2));
    o.require(d2.exact() && d2.lo == 1, "dim at 2");
    for (unsigned n : {3u, 4u}) {
      const RealEnclosure d = dim_U(kl_base(n));
      o.require(d.exact() && d.lo == 0, "dim at q_" + std::to_string(n));
    }
    for (const char* a : {"(1)", "(110)", "(1100)", "(11010010)", "(1101001100101100)"}) {
      const EPSeq alpha = EPSeq::parse(a);
      const auto got = path_counts(build_automaton(alpha), 14);
      const auto want = langoracle::language_counts(alpha, 14);
      for (std::size_t n = 0; n <= 14; ++n) o.require(got[n] == want[n], std::string("count at ") + a);
    }
  });

  criterion(10, "local bound below one near q_KL", kLimit10, [](Outcome& o) {
    const AlgBase q = kl_upper_approximant(16);
    bool certified = false;
    for (mpq_class delta(1, 16); delta > mpq_class(1, 1 << 20); delta /= 2) {
      const mpq_class lim = (mpq_class(2) - q.rational_value()) / 3;
      if (delta >= lim) continue;
      const LocalBound b = b2_local_bound(q, delta);
      std::printf("# delta = %s bound in [%s, %s]\n", delta.get_str().c_str(), b.bound.outward(8).first.c_str(),
                  b.bound.outward(8).second.c_str());
      if (b.bound.hi < 1) {
        certified = true;
        break;
      }
    }
    o.require(certified, "no delta certified");
  });

  criterion(11, "property suites", kLimit11, [](Outcome& o) {
    std::mt19937 g(20240611);
    // symmetry and monotonicity on admissible pairs
    {
      int pairs = 0;
      while (pairs < 200) {
        const mpq_class q = rat(176 + long(g() % 24), 100);
        const AlgBase p = AlgBase::rational(q);
        const EPSeq c = concat(Word("0"), oracle::random_seq(g)), d = concat(Word("0"), oracle::random_seq(g)),
                    ct = concat(Word("0"), oracle::random_seq(g));
        if (!in_A_prime(c, p) || !in_A_prime(d, p) || !in_A_prime(ct, p)) continue;
        ++pairs;
        o.require(f_eval(c, d, q) == f_eval(d, c, q), "symmetry");
        const Order ord = lex_cmp(ct, c);
        if (ord == Order::GT) o.require(f_eval(ct, d, q) > f_eval(c, d, q), "monotone in c");
        if (ord == Order::LT) o.require(f_eval(ct, d, q) < f_eval(c, d, q), "monotone in c");
        if (ord == Order::GT) o.require(f_eval(d, ct, q) > f_eval(d, c, q), "monotone in d");
      }
    }
    // root anti-monotonicity on chains in Omega'_p
    {
      // f <= 0 at p needs small values, so each sequence opens with a zero run
      auto sample = [&] { return concat(Word(std::string(2 + g() % 5, '0')), oracle::random_seq(g, 4, 5)); };
      int chains = 0, tries = 0;
      while (chains < 50 && tries < 200000) {
        ++tries;
        const mpq_class pq = rat(176 + long(g() % 20), 100);
        const AlgBase p = AlgBase::rational(pq);
        const EPSeq c = sample(), ct = sample(), d = sample();
        if (lex_cmp(ct, c) != Order::GT) continue;
        if (!in_A_prime(c, p) || !in_A_prime(ct, p) || !in_A_prime(d, p)) continue;
        if (f_eval(c, d, pq) > 0 || f_eval(ct, d, pq) > 0) continue;
        const auto r = solve_qcd(c, d, p, AlgBase::rational(2));
        const auto rt = solve_qcd(ct, d, p, AlgBase::rational(2));
        o.require(r.has_value() && rt.has_value(), "root in [p, 2]");
        if (r && rt) o.require(*rt < *r, "anti-monotone roots");
        ++chains;
      }
      o.require(chains == 50, "50 chains");
      std::printf("# chains: %d after %d draws\n", chains, tries);
    }
    // generator inequalities, 0 < i < 2^n m (i = 2^n m compares empty words)
    {
      int gens = 0;
      for (std::size_t len = 1; len <= 6; ++len)
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
          std::string s;
          for (std::size_t k = 0; k < len; ++k) s += char('0' + ((bits >> (len - 1 - k)) & 1));
          if (!check_generator(Word(s))) continue;
          ++gens;
          const ComponentSpec comp{Word(s)};
          for (unsigned n = 0; n <= 8; ++n) {
            const std::string th = comp.omega(n).str();
            const std::size_t L = th.size();
            for (std::size_t i = 1; i < L; ++i) {
              const std::string head = th.substr(0, L - i), tail = th.substr(i);
              std::string rh = head;
              for (char& ch : rh) ch = ch == '0' ? '1' : '0';
              o.require(rh < tail && tail <= head, "generator " + s + " n " + std::to_string(n));
            }
          }
        }
      std::printf("# generators checked: %d\n", gens);
    }
    // forbidden words, as stated: neither omega_n nor its reflection occurs
    {
      std::size_t plain = 0, reflected = 0, reflected_after_run = 0, seqs = 0;
      for (unsigned n = 1; n <= 4; ++n) {
        const std::string w = c0().omega(n).str(), rw = reflect(c0().omega(n)).str();
        for (const auto& v : enum_reprs(n, 4)) {
          ++seqs;
          const EPSeq s = repr_to_seq(v, c0());
          const std::string x = oracle::digits(s, s.pre().size() + 2 * s.period().size() + 2 * w.size());
          plain += x.find(w) != std::string::npos;
          const std::size_t p = x.find(rw);
          reflected += p != std::string::npos;
          for (std::size_t q = p; q != std::string::npos; q = x.find(rw, q + 1))
            if (q >= x.find('1')) {
              ++reflected_after_run;
              break;
            }
        }
      }
      o.require(plain == 0, "omega_n occurs");
      o.require(reflected == 0, "reflected omega_n occurs");
      std::printf("# forbidden-word scan over %zu sequences: omega_n in %zu, reflection in %zu, "
                  "reflection after the leading zero run in %zu\n",
                  seqs, plain, reflected, reflected_after_run);
    }
    // reflection invariance
    {
      const std::vector<AlgBase> bases = {base_from_alpha(EPSeq::parse("(1100)")), kl_base(3),
                                          base_from_alpha(EPSeq::parse("(110)")),
                                          base_from_alpha(EPSeq::parse("(1110)")), AlgBase::rational(2)};
      for (int t = 0; t < 500; ++t) {
        const EPSeq s = oracle::random_seq(g, 6, 8);
        const AlgBase& q = bases[t % bases.size()];
        o.require(is_univoque_seq(s, q) == is_univoque_seq(reflect(s), q), "reflection invariance");
      }
    }
  });

  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
