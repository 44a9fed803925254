#pragma once

#include <json.hpp>

#include "symba/approx.hpp"
#include "symba/finvec.hpp"
#include "symba/rho.hpp"
#include "symba/series.hpp"
#include "symba/space.hpp"

namespace symba {

using Json = nlohmann::json;

// All scalars travel as strings: rationals in "p/q" form, binary64 with 17
// significant digits. The one exception is the t_max field of an Orlicz
// function, which is a plain JSON number on both sides.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json value_to_json(const Value& v);

Json finvec_to_json(const FinVec& f);
FinVec finvec_from_json(const Json& j);

Json weights_to_json(const WeightSeq& w);
WeightSeq weights_from_json(const Json& j);

Json orlicz_to_json(const OrliczFn& M);
OrliczFn orlicz_from_json(const Json& j);

Json exponents_to_json(const ExponentSeq& p);
ExponentSeq exponents_from_json(const Json& j);

// {"space": "...", "weights"/"M"/"p": {...}}.
Json space_to_json(const SpaceSpec& spec);
SpaceSpec space_from_json(const Json& j);

Json provider_to_json(const RhoProvider& provider);
RhoProvider provider_from_json(const Json& j);

// {"p":[...], "q":[...], "G_sizes":[...], "rho":[...], "theta":"..."}.
Json theta_to_json(const ThetaBreakdown& b);

// {"kind":..., "N":..., "samples":[[n,"s_n"]...], "verdict":..., "policy":{...},
//  "enclosures"/"crossing"/"notes" when present}.
Json series_to_json(const SeriesDiagnostic& d);

Json builtin_run_to_json(const BuiltinRun& run);

Json load_json_file(const std::string& path);

}  // namespace symba
