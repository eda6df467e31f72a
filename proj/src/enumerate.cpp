#include "b2/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "b2/bases.hpp"
#include "b2/classify.hpp"
#include "b2/error.hpp"

namespace b2 {

namespace {

const ComponentSpec& kl_component() {
  static const ComponentSpec c(Word("0"));
  return c;
}

}  // namespace

std::vector<LadderEntry> qn_ladder(const ComponentSpec& comp, unsigned N) {
  if (N < 1) throw DomainError("ladder needs N >= 1");
  std::vector<LadderEntry> out;
  for (unsigned n = 1; n <= N; ++n) {
    const Word w = comp.omega(n);
    const EPSeq a = EPSeq::periodic(word_dec(w));
    out.push_back({n, base_from_alpha(a), a, w});
  }
  return out;
}

const AlgBase& kl_base(unsigned n) {
  if (n < 1) throw DomainError("q_n is defined for n >= 1");
  static std::mutex mu;
  static std::map<unsigned, AlgBase> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const EPSeq a = EPSeq::periodic(word_dec(kl_component().omega(n)));
    it = cache.emplace(n, base_from_alpha(a)).first;
  }
  return it->second;
}

EPSeq repr_to_seq(const ReprVector& v, const ComponentSpec& comp, const Word& initial) {
  return udiff_generate(comp, initial, v);
}

std::vector<ReprVector> enum_reprs(unsigned n, unsigned jmax) {
  if (jmax < 1) throw DomainError("jmax must be at least 1");
  std::vector<ReprVector> out{ReprVector{}};
  // Subsets of {0..n-1} as k, then every s and j assignment.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    ReprVector base;
    for (unsigned i = 0; i < n; ++i)
      if (mask >> i & 1u) base.k.push_back(i);
    const std::size_t m = base.k.size();
    base.s.assign(m - 1, 0);
    base.j.assign(m, 0);
    for (unsigned sbits = 0; sbits < (1u << (m - 1)); ++sbits) {
      for (std::size_t r = 0; r + 1 < m; ++r) base.s[r] = sbits >> r & 1u;
      base.j[0] = 1;
      for (std::size_t r = 1; r < m; ++r) base.j[r] = 0;
      for (bool done = false; !done;) {
        out.push_back(base);
        done = true;
        for (std::size_t r = m; r-- > 0;) {
          if (base.j[r] < jmax) {
            ++base.j[r];
            done = false;
            break;
          }
          base.j[r] = r == 0 ? 1 : 0;
        }
      }
    }
  }
  auto grade = [](const ReprVector& v) { return v.m() + v.j_sum(); };
  std::sort(out.begin(), out.end(), [&](const ReprVector& a, const ReprVector& b) {
    auto ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
  });
  return out;
}

void for_each_repr(unsigned n, unsigned jmax, const std::function<void(const ReprVector&)>& fn) {
  for (const ReprVector& v : enum_reprs(n, jmax)) fn(v);
}

int derived_order_bound(const B2Witness& w, unsigned n) {
  if (w.reprs.empty()) throw DomainError("witness carries no representation vectors");
  int best = 0;
  for (const auto& [a, b] : w.reprs)
    best = std::max(best, 2 * static_cast<int>(n) - (a.last_k() + 1) - (b.last_k() + 1));
  return best;
}

namespace {

struct Item {
  EPSeq seq;
  ReprVector v;  // first vector in enumeration order
  int weight;    // last_k + 1
};

// Distinct sequences of interval n, ascending in lexicographic order.
std::vector<Item> interval_items(unsigned n, unsigned jmax, int max_weight) {
  std::map<EPSeq, Item> by_seq;
  for (const ReprVector& v : enum_reprs(n, jmax)) {
    if (v.last_k() + 1 > max_weight) continue;
    EPSeq s = repr_to_seq(v, kl_component());
    by_seq.try_emplace(s, Item{s, v, v.last_k() + 1});
  }
  std::vector<Item> out;
  for (auto& [s, it] : by_seq) out.push_back(it);
  std::sort(out.begin(), out.end(), [](const Item& a, const Item& b) { return lex_cmp(a.seq, b.seq) == Order::LT; });
  return out;
}

AlgBase lower_end(unsigned n) { return n == 0 ? AlgBase::rational(1) : kl_base(n); }

// First index in [from, size) where pred holds; pred must be monotone.
template <class Pred>
std::size_t first_true(std::size_t from, std::size_t size, Pred pred) {
  std::size_t lo = from, hi = size;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

struct Found {
  AlgBase root;
  const Item* c;
  const Item* d;
};

// Roots in (q_n, q_{n+1}] for c against items[from..), monotone route.
// f is increasing in d at fixed q, so the pairs with a root form a
// contiguous index range.
void monotone_range(const Item& c, const std::vector<Item>& items, std::size_t from, unsigned n,
                    std::size_t* begin, std::size_t* end) {
  const AlgBase& lo = kl_base(n);
  const AlgBase& hi = kl_base(n + 1);
  *begin = first_true(from, items.size(), [&](std::size_t i) { return f_sign(c.seq, items[i].seq, hi) >= 0; });
  *end = first_true(from, items.size(), [&](std::size_t i) { return f_sign(c.seq, items[i].seq, lo) >= 0; });
}

std::vector<Found> interval_roots(const std::vector<Item>& items, unsigned n) {
  std::vector<Found> out;
  const AlgBase lo = lower_end(n);
  const AlgBase& hi = kl_base(n + 1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (n <= 1) {
      for (std::size_t k = i; k < items.size(); ++k)
        for (const AlgBase& r : f_roots(items[i].seq, items[k].seq, lo, hi))
          if (r > lo) out.push_back({r, &items[i], &items[k]});
      continue;
    }
    std::size_t b, e;
    monotone_range(items[i], items, i, n, &b, &e);
    for (std::size_t k = b; k < e; ++k) {
      auto r = solve_qcd(items[i].seq, items[k].seq, lo, hi);
      if (r && *r > lo) out.push_back({*r, &items[i], &items[k]});
    }
  }
  return out;
}

}  // namespace

std::vector<B2Witness> enum_B2(unsigned n, unsigned jmax) {
  const std::vector<Item> items = interval_items(n, jmax, static_cast<int>(n));
  std::vector<Found> found = interval_roots(items, n);
  std::stable_sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.root < b.root; });
  std::vector<B2Witness> out;
  for (const Found& f : found) {
    if (!out.empty() && out.back().root == f.root) {
      out.back().reprs.emplace_back(f.c->v, f.d->v);
      continue;
    }
    B2Witness w = make_witness(f.c->seq, f.d->seq, f.root);
    if (!w.admissible) continue;
    w.reprs.emplace_back(f.c->v, f.d->v);
    out.push_back(std::move(w));
  }
  for (B2Witness& w : out) w.derived_order = derived_order_bound(w, n);
  return out;
}

DerivedMin min_derived_info(unsigned j, unsigned jmax, unsigned nmax) {
  const int jj = static_cast<int>(j);
  for (unsigned n = 1; n <= nmax; ++n) {
    const int budget = 2 * static_cast<int>(n) - jj;
    if (budget < 0) continue;
    const std::vector<Item> items = interval_items(n, jmax, std::min(budget, static_cast<int>(n)));
    std::map<int, std::vector<Item>> classes;
    for (const Item& it : items) classes[it.weight].push_back(it);

    std::optional<DerivedMin> best;
    auto offer = [&](const AlgBase& r, const Item& c, const Item& d, bool endpoint) {
      if (best && !(r < best->root)) return;
      best = DerivedMin{r, 2 * static_cast<int>(n) - c.weight - d.weight, n, endpoint, c.seq, d.seq, c.v, d.v};
    };

    if (n == 1) {
      for (const Found& f : interval_roots(items, n)) {
        if (f.c->weight + f.d->weight > budget) continue;
        if (in_A_prime(f.c->seq, f.root) && in_A_prime(f.d->seq, f.root)) offer(f.root, *f.c, *f.d, false);
      }
    } else {
      const AlgBase& lo = kl_base(n);
      const AlgBase& hi = kl_base(n + 1);
      for (auto& [wa, A] : classes) {
        for (auto& [wb, B] : classes) {
          if (wa > wb || wa + wb > budget) continue;
          const bool a_small = A.size() <= B.size();
          const std::vector<Item>& small = a_small ? A : B;
          const std::vector<Item>& big = a_small ? B : A;
          for (const Item& c : small) {
            std::size_t b, e;
            monotone_range(c, big, 0, n, &b, &e);
            // f(q_n) = 0: the pair's roots accumulate at q_n from the right.
            if (e < big.size() && f_sign(c.seq, big[e].seq, lo) == 0) offer(lo, c, big[e], true);
            // Largest d in range gives the smallest root.
            for (std::size_t k = e; k > b; --k) {
              auto r = solve_qcd(c.seq, big[k - 1].seq, lo, hi);
              if (!r || !(*r > lo)) continue;
              if (in_A_prime(c.seq, *r) && in_A_prime(big[k - 1].seq, *r)) {
                offer(*r, c, big[k - 1], false);
                break;
              }
            }
          }
        }
      }
    }
    if (best) return *best;
  }
  throw NotFoundWithinBounds("no base of derived order >= " + std::to_string(j) + " with jmax " + std::to_string(jmax) +
                             " and nmax " + std::to_string(nmax));
}

AlgBase min_derived(unsigned j, unsigned jmax, unsigned nmax) { return min_derived_info(j, jmax, nmax).root; }

}  // namespace b2
