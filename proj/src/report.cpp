#include "b2/report.hpp"

#include <json.hpp>

#include <sstream>

namespace b2::report {

using nlohmann::ordered_json;

namespace {

ordered_json coeff(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

ordered_json poly(const ZPoly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(coeff(c));
  return a;
}

std::string csv_poly(const ZPoly& p) {
  std::string s = p.json();
  return "\"" + s + "\"";
}

ordered_json enclosure(const RealEnclosure& e, int digits) {
  auto [lo, hi] = e.outward(digits);
  return ordered_json::array({lo, hi});
}

ordered_json base_obj(const AlgBase& q, int digits) {
  ordered_json j;
  j["decimal"] = q.decimal(digits);
  j["minpoly"] = poly(q.minpoly());
  auto [lo, hi] = q.interval();
  j["interval"] = ordered_json::array({lo.get_str(), hi.get_str()});
  return j;
}

ordered_json repr_obj(const ReprVector& v) { return v.str(); }

ordered_json witness_obj(const B2Witness& w, int digits) {
  ordered_json j;
  j["c"] = w.c.str();
  j["d"] = w.d.str();
  j["minpoly"] = poly(w.root.minpoly());
  j["root"] = w.root.decimal(digits);
  j["admissible"] = w.admissible;
  j["derived_order"] = w.derived_order ? ordered_json(*w.derived_order) : ordered_json(nullptr);
  j["fpoly"] = poly(w.fpoly);
  ordered_json reps = ordered_json::array();
  for (const auto& [a, b] : w.reprs) reps.push_back(ordered_json::array({repr_obj(a), repr_obj(b)}));
  j["repr_vectors"] = reps;
  return j;
}

}  // namespace

std::string base_json(const AlgBase& q, int digits) { return base_obj(q, digits).dump(); }

std::string witness_json(const B2Witness& w, int digits) { return witness_obj(w, digits).dump(); }

std::string witnesses_json(const std::vector<B2Witness>& ws, int digits) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(witness_obj(w, digits));
  return a.dump();
}

std::string enum_csv(const std::vector<B2Witness>& ws, unsigned n, int digits) {
  std::ostringstream os;
  os << "n,root_approx,minpoly,c,d,derived_order,admissible\n";
  for (const auto& w : ws) {
    os << n << ',' << w.root.decimal(digits) << ',' << csv_poly(w.root.minpoly()) << ',' << w.c.str() << ','
       << w.d.str() << ',' << (w.derived_order ? std::to_string(*w.derived_order) : std::string()) << ','
       << (w.admissible ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string ladder_json(const std::vector<LadderEntry>& l, int digits) {
  ordered_json a = ordered_json::array();
  for (const auto& e : l) {
    ordered_json j;
    j["n"] = e.n;
    j["base"] = base_obj(e.base, digits);
    j["alpha"] = e.alpha.str();
    j["beta_word"] = e.beta_word.str();
    a.push_back(j);
  }
  return a.dump();
}

std::string ladder_csv(const std::vector<LadderEntry>& l, int digits) {
  std::ostringstream os;
  os << "n,base,minpoly,alpha,beta_word\n";
  for (const auto& e : l)
    os << e.n << ',' << e.base.decimal(digits) << ',' << csv_poly(e.base.minpoly()) << ',' << e.alpha.str() << ','
       << e.beta_word.str() << '\n';
  return os.str();
}

std::string classify_json(const AlgBase& q, const BaseClass& c, int digits) {
  ordered_json j;
  j["base"] = base_obj(q, digits);
  j["class"] = tag_name(c.tag);
  j["lower_strict"] = c.lower_strict;
  j["lower_weak"] = c.lower_weak;
  j["upper_strict"] = c.upper_strict;
  j["upper_weak"] = c.upper_weak;
  j["first_lower_fail"] = c.first_lower_fail;
  j["first_upper_fail"] = c.first_upper_fail;
  j["shifts_checked"] = c.shifts_checked;
  return j.dump();
}

std::string entropy_json(const EntropyInfo& h, const RealEnclosure& dim, int digits) {
  ordered_json j;
  j["entropy_log"] = h.log_lambda.certified(digits);
  j["dim"] = enclosure(dim, digits);
  j["states"] = h.states;
  j["charpoly"] = poly(h.charpoly);
  j["zero_entropy"] = h.zero;
  ordered_json fb = ordered_json::array();
  for (const auto& [n, e] : h.finite_bounds) {
    ordered_json b;
    b["n"] = n;
    b["log_count_over_n"] = enclosure(e, digits);
    fb.push_back(b);
  }
  j["finite_bounds"] = fb;
  return j.dump();
}

std::string local_bound_json(const AlgBase& q, const mpq_class& delta, const LocalBound& b, int digits) {
  ordered_json j;
  j["base"] = base_obj(q, digits);
  j["delta"] = delta.get_str();
  j["bound"] = enclosure(b.bound, digits);
  j["below_one"] = b.bound.hi < 1;
  j["dominating_alpha"] = b.dominating_alpha.str();
  j["exact_alpha"] = b.exact_alpha;
  j["entropy"] = enclosure(b.entropy, digits);
  return j.dump();
}

std::string count_json(const CountResult& r) {
  ordered_json j;
  j["count"] = r.str();
  j["exact"] = r.exact;
  j["k"] = r.k.get_str();
  return j.dump();
}

std::string derived_json(unsigned jj, const DerivedMin& m, int digits) {
  ordered_json j;
  j["j"] = jj;
  j["root"] = base_obj(m.root, digits);
  j["order"] = m.order;
  j["interval"] = m.interval;
  j["left_endpoint"] = m.left_endpoint;
  j["c"] = m.c.str();
  j["d"] = m.d.str();
  j["repr_vectors"] = ordered_json::array({m.vc.str(), m.vd.str()});
  return j.dump();
}

}  // namespace b2::report
