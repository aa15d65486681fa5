#pragma once

// JSON wire formats. Every rational is a "p/q" string ("p" when q = 1). Objects keep
// insertion order so output is byte-stable.

#include "orbitkit/groups.hpp"
#include "orbitkit/involution.hpp"
#include "orbitkit/lie_fields.hpp"
#include "orbitkit/orbits.hpp"

#include <json.hpp>

#include <string>

namespace orbitkit {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

/// {"n": 3, "x1": "2", "xp": [...], "y1": "1/2", "yp": [...]}
Json point_to_json(const PointX1& p);
PointX1 point_from_json(const Json& j);
/// Parses text, mapping JSON syntax errors to ParseError.
PointX1 parse_point(const std::string& text);

/// {"tag": "tildeH", "n": 3, "matrix": [[...]]}; torus uses "t"; products nest "components".
Json element_to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j);

Json fiber_to_json(const FiberSpec& f);
/// "q=X1,Y1" or "Q=T".
FiberSpec parse_fiber(const std::string& text);

/// {"case": "H1", "q": ["1","1"], "stratum": "Origin"} or, for the Q-cases,
/// {"case": "H", "Q": "0", "sgn_x1": "+", "sgn_y1": "+", "stratum": "Cone"}.
/// ConeSigned adds "sign", ConeParam adds "param".
Json label_to_json(const OrbitLabel& l);
OrbitLabel label_from_json(const Json& j, std::size_t n);

Json census_to_json(const CensusReport& r);
Json span_report_to_json(const SpanReport& r);
Json rank_table_to_json(const RankTable& t);
Json identity_report_to_json(const IdentityReport& r);

/// {"n": 2, "terms": [{"alpha": [1,0,1,0], "c": "1"}]}
Json delta_to_json(const DeltaDistribution& d);
DeltaDistribution delta_from_json(const Json& j);

}  // namespace orbitkit
