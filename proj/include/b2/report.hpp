#pragma once

#include <string>
#include <vector>

#include "b2/algebraic.hpp"
#include "b2/b2core.hpp"
#include "b2/bases.hpp"
#include "b2/classify.hpp"
#include "b2/dimension.hpp"
#include "b2/enumerate.hpp"

namespace b2::report {

// All functions return compact JSON text (one object or array) unless the
// name says csv.
std::string base_json(const AlgBase& q, int digits);
std::string witness_json(const B2Witness& w, int digits);
std::string witnesses_json(const std::vector<B2Witness>& ws, int digits);
std::string enum_csv(const std::vector<B2Witness>& ws, unsigned n, int digits);
std::string ladder_json(const std::vector<LadderEntry>& l, int digits);
std::string ladder_csv(const std::vector<LadderEntry>& l, int digits);
std::string classify_json(const AlgBase& q, const BaseClass& c, int digits);
std::string entropy_json(const EntropyInfo& h, const RealEnclosure& dim, int digits);
std::string local_bound_json(const AlgBase& q, const mpq_class& delta, const LocalBound& b, int digits);
std::string count_json(const CountResult& r);
std::string derived_json(unsigned j, const DerivedMin& m, int digits);

}  // namespace b2::report
