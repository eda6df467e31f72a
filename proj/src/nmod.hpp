#pragma once
// Polynomial and scalar arithmetic modulo a word-size prime p < 2^31.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "b2/poly.hpp"

namespace b2::nmod {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // low to high, trimmed

inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

void trim(Poly& a);
int deg(const Poly& a);
Poly reduce(const ZPoly& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 k, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r);
Poly make_monic(const Poly& a, u64 p);
Poly gcd(const Poly& a, const Poly& b, u64 p);
// Returns monic g = s a + t b.
Poly xgcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t);
Poly derivative(const Poly& a, u64 p);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m, u64 p);

bool is_prime(u64 n);

}  // namespace b2::nmod
