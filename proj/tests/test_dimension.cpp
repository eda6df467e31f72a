#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <set>

#include "b2/bases.hpp"
#include "b2/classify.hpp"
#include "b2/dimension.hpp"
#include "b2/enumerate.hpp"
#include "b2/error.hpp"
#include "language_oracle.hpp"
#include "oracle.hpp"

using namespace b2;

namespace {

double log_of(const mpz_class& x) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(m) + double(e) * std::log(2.0);
}

const std::vector<const char*> kFive = {"(1)", "(110)", "(1100)", "(11010010)", "(1101001100101100)"};

}  // namespace

TEST_CASE("automaton counts equal brute-force factor counts") {
  for (const char* t : kFive) {
    const EPSeq alpha = EPSeq::parse(t);
    const UqAutomaton m = build_automaton(alpha);
    const auto got = path_counts(m, 14);
    const auto want = langoracle::language_counts(alpha, 14);
    INFO("alpha = " << std::string(t));
    for (std::size_t n = 0; n <= 14; ++n) CHECK(got[n] == want[n]);
    // deterministic, no dead ends
    for (const auto& row : m.next) CHECK((row[0] >= 0 || row[1] >= 0));
  }
  // at base 2 every word occurs
  const auto full = path_counts(build_automaton(EPSeq::parse("(1)")), 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(full[n] == mpz_class(1) << n);
}

TEST_CASE("automata from bases agree with automata from alpha") {
  CHECK(build_automaton(kl_base(3)).size() == build_automaton(EPSeq::parse("(11010010)")).size());
  CHECK_THROWS_AS(build_automaton(EPSeq::parse("(1001)")), DomainError);
}

TEST_CASE("entropy at base 2") {
  const EntropyInfo h = entropy(AlgBase::rational(2));
  CHECK_FALSE(h.zero);
  CHECK(h.lambda_lo <= 2);
  CHECK(h.lambda_hi >= 2);
  CHECK(h.log_lambda.lo <= std::log(2.0) + 1e-15);
  CHECK(h.log_lambda.hi >= std::log(2.0) - 1e-15);
  CHECK(h.log_lambda.hi - h.log_lambda.lo < 1e-9);
  const RealEnclosure d = dim_U(AlgBase::rational(2));
  CHECK(d.exact());
  CHECK(d.lo == 1);
}

TEST_CASE("entropy vanishes below q_KL") {
  const std::vector<AlgBase> low = {base_from_alpha(EPSeq::parse("(10)")), kl_base(2), kl_base(3), kl_base(4),
                                    kl_base(6)};
  for (const AlgBase& q : low) {
    const EntropyInfo h = entropy(q, 256);
    CHECK(h.zero);
    CHECK(h.log_lambda.exact());
    CHECK(h.log_lambda.lo == 0);
    const RealEnclosure d = dim_U(q);
    CHECK(d.exact());
    CHECK(d.lo == 0);
    // sub-exponential growth: the n-th root of the count tends to 1
    const auto c = path_counts(build_automaton(q), 4096);
    CHECK(log_of(c[4096]) / 4096 < 0.01);
  }
}

TEST_CASE("positive entropy above the constant") {
  for (const char* t : {"(110)", "(1110)", "(11100)", "(11010100)"}) {
    const EPSeq alpha = EPSeq::parse(t);
    const UqAutomaton m = build_automaton(alpha);
    const EntropyInfo h = entropy(m, 512);
    INFO("alpha = " << std::string(t));
    REQUIRE_FALSE(h.zero);
    CHECK(h.log_lambda.lo > 0);
    CHECK(h.log_lambda.hi - h.log_lambda.lo < 1e-8);
    // lambda is a root of the dominant component's characteristic polynomial
    CHECK(sign_at(h.lambda_poly, h.lambda_lo) * sign_at(h.lambda_poly, h.lambda_hi) <= 0);
    const auto roots = real_roots(h.charpoly, h.lambda_lo, h.lambda_hi);
    CHECK(roots.size() == 1);
    // growth ratio of the path counts
    const auto c = path_counts(m, 2400);
    const double rate = (log_of(c[2400]) - log_of(c[1200])) / 1200;
    CHECK(std::fabs(rate - h.log_lambda.lo.get_d()) < 2e-3);
    // finite bounds dominate and decrease
    for (std::size_t i = 0; i < h.finite_bounds.size(); ++i) {
      CHECK(h.finite_bounds[i].second.hi >= h.log_lambda.lo);
      if (i > 0) CHECK(h.finite_bounds[i].second.lo <= h.finite_bounds[i - 1].second.hi);
    }
    const RealEnclosure d = dim_U(base_from_alpha(alpha));
    CHECK(d.lo > 0);
    CHECK(d.hi < 1);
    CHECK(d.hi - d.lo <= mpq_class(1, 1000000000));
  }
}

TEST_CASE("entropy grows with the base") {
  const std::vector<const char*> order = {"(1100)", "(11010100)", "(110)", "(11100)", "(1110)", "(1)"};
  mpq_class prev = 0;
  for (const char* t : order) {
    const EntropyInfo h = entropy(build_automaton(EPSeq::parse(t)), 1);
    CHECK(h.log_lambda.hi >= prev);
    prev = h.log_lambda.lo;
  }
}

TEST_CASE("decimal forms of enclosures") {
  const RealEnclosure e{mpq_class(12345, 10000), mpq_class(12349, 10000)};
  CHECK(e.certified(6) == "1.234");
  const auto [lo, hi] = e.outward(3);
  CHECK(lo == "1.234");
  CHECK(hi == "1.235");
  const RealEnclosure z{0, 0};
  CHECK(z.exact());
}

TEST_CASE("local bound for two-expansion bases") {
  const AlgBase q = kl_upper_approximant(16);
  CHECK(q > kl_base(8));
  CHECK(std::fabs(q.approx() - 1.78724670) < 1e-7);
  // its quasi-greedy digits exceed the Thue-Morse prefix
  std::string tm;
  for (std::size_t i = 1; i <= 256; ++i) tm += char('0' + oracle::thue_morse_digit(i));
  CHECK(alpha_digits(q, 256).str() > tm);
  const LocalBound b = b2_local_bound(q, mpq_class(1, 128));
  CHECK(b.bound.lo >= 0);
  CHECK(b.bound.hi < 1);
  CHECK(b.entropy.lo > 0);
  // the dominating alpha is at least alpha(q + delta)
  const AlgBase top = AlgBase::rational(q.rational_value() + mpq_class(1, 128));
  CHECK(static_cast<int>(cmp_alpha(b.dominating_alpha, top)) >= 0);

  const LocalBound low = b2_local_bound(kl_base(4), mpq_class(1, 1000000));
  CHECK(low.bound.lo >= 0);
  CHECK(low.bound.hi < mpq_class(1, 10));

  const LocalBound mid = b2_local_bound(AlgBase::rational(mpq_class(19, 10)), mpq_class(1, 100));
  CHECK(mid.bound.lo > 0);
  CHECK(mid.bound.hi < 2);

  CHECK_THROWS_AS(b2_local_bound(q, 0), DomainError);
  CHECK_THROWS_AS(b2_local_bound(q, mpq_class(1, 10)), DomainError);
  CHECK_THROWS_AS(b2_local_bound(AlgBase::rational(2), mpq_class(1, 1000)), DomainError);
}
