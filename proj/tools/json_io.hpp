#pragma once

// JSON encoding of the valuix data types. Rationals travel as strings
// ("3/2", "-4"); exponent vectors and rays as integer arrays.

#include "json.hpp"
#include "valuix/checks.hpp"
#include "valuix/divisors.hpp"
#include "valuix/intersection.hpp"
#include "valuix/toric.hpp"
#include "valuix/valuation.hpp"

namespace valuix::io {

using nlohmann::json;

Rat rat(const json& j);
RatVec rat_vec(const json& j);
IntVec int_vec(const json& j);
std::size_t dim(const json& j);

MonomialIdeal ideal(const json& j);
/// {"n", "terms": [{"c", "ideal"}]}, or a bare ideal read as log|a|.
PshGerm germ(const json& j);
std::vector<MonomialIdeal> ideal_list(const json& j);
Fan fan(const json& j);
Polynomial polynomial(const json& j);
ShiftedMonomialValuation valuation(const json& j, std::int64_t max_degree);

json encode(const Rat& r);
json encode(const Extended& r);
json encode(const RatVec& v);
json encode(const MonomialIdeal& a);
json encode(const NewtonRegion& p);
json encode(const AtomicMeasure& mu);
json encode(const DualComplex& d);
json encode(const CheckReport& r);

}  // namespace valuix::io
