#pragma once

// JSON forms of the library's values. Rationals are "num/den" strings, primes are
// numbers, projective coordinates are arrays of integer strings.

#include "dioph/approx.hpp"
#include "dioph/curves.hpp"
#include "dioph/hyperarr.hpp"
#include "dioph/projective.hpp"
#include "dioph/thuemahler.hpp"
#include "dioph/unitsolve.hpp"

#include <json.hpp>

namespace dioph {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const SContext& s);
Json to_json(const ProjPoint& p);
Json to_json(const std::vector<Rational>& v);
Json to_json(const ClassRep& c);
Json to_json(const BinaryFormSpec& f);
Json to_json(const TMSolution& s);
Json to_json(const ShearResult& r);
Json to_json(const Interval& x);
Json to_json(const ApproxReport& r);
Json to_json(const ForwardReport& r);
Json to_json(const Covering& c);
Json to_json(const ArrangementCover& c);
Json to_json(const CurvePoint& p);
Json to_json(const Reordering& r);

Rational rational_from_json(const Json& j);
SContext context_from_json(const Json& j);
ProjPoint point_from_json(const Json& j);

}  // namespace dioph
