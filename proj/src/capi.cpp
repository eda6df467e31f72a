#include "b2/b2_capi.h"

#include <json.hpp>

#include <string>

#include "b2/b2core.hpp"
#include "b2/bases.hpp"
#include "b2/classify.hpp"
#include "b2/dimension.hpp"
#include "b2/enumerate.hpp"
#include "b2/error.hpp"
#include "b2/report.hpp"

struct b2_base {
  b2::AlgBase q;
};
struct b2_seq {
  b2::EPSeq s;
};
struct b2_text {
  std::string s;
};

namespace {

thread_local std::string g_error;

template <class F>
b2_status guard(F&& f) {
  try {
    g_error.clear();
    f();
    return B2_OK;
  } catch (const b2::NoRootByCase& e) {
    g_error = e.what();
    return B2_ERR_NO_ROOT_BY_CASE;
  } catch (const b2::DomainError& e) {
    g_error = e.what();
    return B2_ERR_DOMAIN;
  } catch (const b2::NotFoundWithinBounds& e) {
    g_error = e.what();
    return B2_ERR_NOT_FOUND;
  } catch (const b2::ParseError& e) {
    g_error = e.what();
    return B2_ERR_PARSE;
  } catch (const b2::UnsupportedBase& e) {
    g_error = e.what();
    return B2_ERR_UNSUPPORTED;
  } catch (const std::exception& e) {
    g_error = e.what();
    return B2_ERR_INTERNAL;
  }
}

void need(const void* p) {
  if (!p) throw std::invalid_argument("null argument");
}

b2_status null_arg() {
  g_error = "null argument";
  return B2_ERR_NULL;
}

void emit(b2_text** out, std::string s) { *out = new b2_text{std::move(s)}; }

b2::AlgBase parse_base(const char* spec) {
  std::string t(spec);
  if (t.rfind("poly:", 0) == 0 || t.rfind("alpha:", 0) == 0) return b2::parse_base_spec(t);
  b2::AlgBase q = b2::AlgBase::rational(b2::parse_rational(t));
  if (q.cmp(mpq_class(1)) <= 0 || q.cmp(mpq_class(2)) > 0) throw b2::DomainError("base must lie in (1, 2]");
  return q;
}

b2::AlgBase component_base(const b2::ComponentSpec& comp, unsigned n) {
  return b2::base_from_alpha(b2::EPSeq::periodic(b2::word_dec(comp.omega(n))));
}

}  // namespace

extern "C" {

const char* b2_last_error(void) { return g_error.c_str(); }
const char* b2_version(void) { return "1.0.0"; }

const char* b2_text_get(const b2_text* t) { return t ? t->s.c_str() : ""; }
void b2_text_free(b2_text* t) { delete t; }

b2_status b2_base_parse(const char* spec, b2_base** out) {
  if (!spec || !out) return null_arg();
  return guard([&] { *out = new b2_base{parse_base(spec)}; });
}

b2_status b2_base_from_alpha(const b2_seq* alpha, b2_base** out) {
  if (!alpha || !out) return null_arg();
  return guard([&] { *out = new b2_base{b2::base_from_alpha(alpha->s)}; });
}

b2_status b2_base_ladder(const char* gen, unsigned n, b2_base** out) {
  if (!gen || !out) return null_arg();
  return guard([&] {
    if (n < 1) throw b2::DomainError("ladder index must be >= 1");
    *out = new b2_base{component_base(b2::ComponentSpec(b2::Word(gen)), n)};
  });
}

b2_status b2_base_kl_upper(unsigned bits, b2_base** out) {
  if (!out) return null_arg();
  return guard([&] { *out = new b2_base{b2::kl_upper_approximant(bits)}; });
}

void b2_base_free(b2_base* q) { delete q; }

b2_status b2_base_decimal(const b2_base* q, int digits, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] { emit(out, q->q.decimal(digits)); });
}

b2_status b2_base_json(const b2_base* q, int digits, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] { emit(out, b2::report::base_json(q->q, digits)); });
}

b2_status b2_base_cmp(const b2_base* a, const b2_base* b, int* out) {
  if (!a || !b || !out) return null_arg();
  return guard([&] { *out = a->q.cmp(b->q); });
}

b2_status b2_seq_parse(const char* text, b2_seq** out) {
  if (!text || !out) return null_arg();
  return guard([&] { *out = new b2_seq{b2::EPSeq::parse(text)}; });
}

void b2_seq_free(b2_seq* s) { delete s; }

b2_status b2_seq_str(const b2_seq* s, b2_text** out) {
  if (!s || !out) return null_arg();
  return guard([&] { emit(out, s->s.str()); });
}

b2_status b2_alpha_digits(const b2_base* q, size_t n, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] { emit(out, b2::alpha_digits(q->q, n).str()); });
}

b2_status b2_beta_digits(const b2_base* q, size_t n, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] {
    auto g = b2::beta_digits(q->q, n);
    nlohmann::ordered_json j;
    j["digits"] = g.digits.str();
    j["finite"] = g.finite;
    emit(out, j.dump());
  });
}

b2_status b2_classify(const b2_base* q, int digits, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] { emit(out, b2::report::classify_json(q->q, b2::classify_base(q->q), digits)); });
}

b2_status b2_omega(const char* gen, unsigned n, b2_text** out) {
  if (!gen || !out) return null_arg();
  return guard([&] {
    if (n > 24) throw b2::DomainError("n above 24 is not supported");
    emit(out, b2::ComponentSpec(b2::Word(gen)).omega(n).str());
  });
}

b2_status b2_ladder(const char* gen, unsigned count, int digits, b2_format fmt, b2_text** out) {
  if (!gen || !out) return null_arg();
  return guard([&] {
    if (count > 16) throw b2::DomainError("ladder length above 16 is not supported");
    auto l = b2::qn_ladder(b2::ComponentSpec(b2::Word(gen)), count);
    emit(out, fmt == B2_FORMAT_CSV ? b2::report::ladder_csv(l, digits) : b2::report::ladder_json(l, digits));
  });
}

b2_status b2_solve(const b2_seq* c, const b2_seq* d, const b2_base* lo, const b2_base* hi, int digits, b2_text** out) {
  if (!c || !d || !lo || !hi || !out) return null_arg();
  return guard([&] {
    std::vector<b2::B2Witness> ws;
    for (const b2::AlgBase& r : b2::f_roots(c->s, d->s, lo->q, hi->q)) ws.push_back(b2::make_witness(c->s, d->s, r));
    emit(out, b2::report::witnesses_json(ws, digits));
  });
}

b2_status b2_f_sign(const b2_seq* c, const b2_seq* d, const b2_base* q, int* out) {
  if (!c || !d || !q || !out) return null_arg();
  return guard([&] { *out = b2::f_sign(c->s, d->s, q->q); });
}

b2_status b2_enum_b2(unsigned n, unsigned jmax, int digits, b2_format fmt, b2_text** out) {
  if (!out) return null_arg();
  return guard([&] {
    auto ws = b2::enum_B2(n, jmax);
    emit(out, fmt == B2_FORMAT_JSON ? b2::report::witnesses_json(ws, digits) : b2::report::enum_csv(ws, n, digits));
  });
}

b2_status b2_min_derived(unsigned j, unsigned jmax, unsigned nmax, int digits, b2_text** out) {
  if (!out) return null_arg();
  return guard([&] { emit(out, b2::report::derived_json(j, b2::min_derived_info(j, jmax, nmax), digits)); });
}

b2_status b2_entropy(const b2_base* q, size_t nmax, int digits, b2_text** out) {
  if (!q || !out) return null_arg();
  return guard([&] {
    auto h = b2::entropy(q->q, nmax);
    mpq_class tol(1);
    for (int i = 0; i < digits; ++i) tol /= 10;
    emit(out, b2::report::entropy_json(h, b2::dim_U(q->q, tol), digits));
  });
}

b2_status b2_dim_bound(const b2_base* q, const char* delta, int digits, b2_text** out) {
  if (!q || !delta || !out) return null_arg();
  return guard([&] {
    const mpq_class d = b2::parse_rational(delta);
    emit(out, b2::report::local_bound_json(q->q, d, b2::b2_local_bound(q->q, d), digits));
  });
}

b2_status b2_count(const char* x, const b2_base* q, size_t cap, size_t depth, b2_text** out) {
  if (!x || !q || !out) return null_arg();
  return guard([&] {
    std::string t(x);
    b2::FieldElem v = t.rfind("seq:", 0) == 0 ? b2::eval(b2::EPSeq::parse(t.substr(4)), q->q)
                                             : b2::FieldElem(q->q, b2::parse_rational(t));
    emit(out, b2::report::count_json(b2::count_expansions(v, q->q, cap, depth)));
  });
}

b2_status b2_witness(const char* gen, unsigned prop62_n, int digits, b2_text** out) {
  if (!gen || !out) return null_arg();
  return guard([&] {
    nlohmann::ordered_json j;
    j["gen"] = gen;
    if (prop62_n == 0) {
      const b2::VWitness v = b2::witness_for_V_base(b2::Word(gen));
      const b2::AlgBase q = b2::base_from_alpha(v.alpha);
      b2::B2Witness w = b2::make_witness(v.c, v.d, q);
      if (!b2::f_eval(v.c, v.d, q).is_zero()) throw b2::DomainError("internal: witness residual is not zero");
      j["alpha"] = v.alpha.str();
      j["witness"] = nlohmann::ordered_json::parse(b2::report::witness_json(w, digits));
    } else {
      const b2::ComponentSpec comp{b2::Word(gen)};
      auto [c, d] = b2::prop62_pair(comp, prop62_n);
      const b2::AlgBase lo = component_base(comp, prop62_n), hi = component_base(comp, prop62_n + 1);
      j["n"] = prop62_n;
      j["c"] = c.str();
      j["d"] = d.str();
      j["sign_at_q_n"] = b2::f_sign(c, d, lo);
      j["sign_at_q_n_plus_1"] = b2::f_sign(c, d, hi);
      auto w = b2::certify_b2(c, d, lo, hi);
      if (w) {
        if (comp.generator().str() == "0") {
          w->reprs.push_back(b2::prop62_vectors(prop62_n));
          w->derived_order = b2::derived_order_bound(*w, prop62_n);
        }
        j["witness"] = nlohmann::ordered_json::parse(b2::report::witness_json(*w, digits));
      } else {
        j["witness"] = nullptr;
      }
    }
    emit(out, j.dump());
  });
}

}  // extern "C"
