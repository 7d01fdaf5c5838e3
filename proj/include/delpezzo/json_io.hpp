#pragma once

// JSON forms of the library's results. Objects use nlohmann::json, whose
// std::map storage keeps keys sorted, so dumps are canonical.

#include <json.hpp>

#include "delpezzo/classifier.hpp"
#include "delpezzo/fpgroups.hpp"
#include "delpezzo/lattice.hpp"
#include "delpezzo/plane_action.hpp"
#include "delpezzo/surfaces.hpp"

namespace delpezzo::json_io {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in 64 bits; anything else is a string "p/q".
Json rational(const cyclo::Rational& q);
Json bigint(const fpgroups::BigInt& z);
Json config(const lattice::SingularityConfig& c);

Json quotient_profile(const plane::QuotientProfile& p, const plane::EulerBalance& euler);
Json enumeration(const classifier::SurfaceProfile& top, const classifier::Enumeration& e);
Json lemma1(const classifier::Lemma1Table& t);
Json theorem1(const classifier::Theorem1Report& r);
Json ramification(const classifier::RamificationReport& r);

Json abelianization(const fpgroups::Abelianization& a);

Json curve_config(const lattice::CurveConfig& c);
/// {"labels":[...], "matrix":[[...]], "multiplicities":[...]}; multiplicities
/// may be omitted. Throws ParseError on a malformed object.
lattice::CurveConfig parse_curve_config(const Json& j);

Json cone_singularities(const surfaces::ConeSingularities& s);
Json curve_germ(const surfaces::CurveGerm& g);
Json curve_analysis(const surfaces::CurveAnalysis& c);
Json za_report(const surfaces::ZaReport& r);

}  // namespace delpezzo::json_io
