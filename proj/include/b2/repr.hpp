#pragma once

#include <string>
#include <vector>

namespace b2 {

// Representation vector (k, s, j). k strictly increasing with m entries,
// s holds s_2..s_m, j holds j_0..j_{m-1}; the last exponent is infinite.
// m = 0 is the vector (inf).
struct ReprVector {
  std::vector<unsigned> k;
  std::vector<unsigned> s;
  std::vector<unsigned> j;

  std::size_t m() const { return k.size(); }
  bool is_inf() const { return k.empty(); }
  int last_k() const { return k.empty() ? -1 : static_cast<int>(k.back()); }
  unsigned j_sum() const {
    unsigned t = 0;
    for (unsigned v : j) t += v;
    return t;
  }
  std::string str() const;
  auto operator<=>(const ReprVector&) const = default;
};

}  // namespace b2
