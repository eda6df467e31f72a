#pragma once

#include <utility>
#include <vector>

#include "b2/poly.hpp"

namespace b2 {

struct Factor {
  ZPoly poly;  // monic irreducible over Q
  int multiplicity;
};

// Complete factorization over Z of a monic polynomial (Zassenhaus with
// Hensel lifting). Factors are sorted by degree, then coefficients.
std::vector<Factor> factor_monic(const ZPoly& f);

// Irreducibility of a monic squarefree polynomial.
bool is_irreducible(const ZPoly& f);

// Characteristic polynomial det(xI - A) of a square 0/1 or small integer matrix.
ZPoly charpoly(const std::vector<std::vector<long>>& a);

}  // namespace b2
