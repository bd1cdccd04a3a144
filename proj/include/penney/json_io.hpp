#pragma once

#include "json.hpp"
#include "penney/algebraic.hpp"
#include "penney/poly.hpp"
#include "penney/race.hpp"

namespace penney {

using Json = nlohmann::json;

/// 15 significant digits, enough to round-trip a double.
std::string approx15(const Rat& q);

Json rat_json(const Rat& q);                 // {"exact": "a/b", "approx": "..."}
Json zpoly_json(const ZPoly& p);             // ascending coefficient strings
ZPoly zpoly_from_json(const Json& j);
Json algebraic_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const Json& j);
Json ratfunc_json(const RatFunc& f);
Json race_result_json(const RaceResult& r, TieConvention conv);

}  // namespace penney
