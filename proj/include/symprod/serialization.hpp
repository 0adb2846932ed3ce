#pragma once

#include "symprod/linear_series.hpp"
#include "symprod/ns_calculus.hpp"
#include "symprod/plane_embedding.hpp"

#include "json.hpp"

namespace symprod {

// Stable field order everywhere, so serialized output is byte-reproducible.
using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they are exactly representable
// in a double (|v| < 2^53) and as decimal strings beyond that; parsing
// accepts both spellings.
Json json_int(const Int& v);
Int int_from_json(const Json& j);

// Rationals always as "num/den" strings.
Json json_rat(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const DivisorClass& c);  // {"g", "n", "xi", "theta"}
DivisorClass divisor_class_from_json(const Json& j);

Json to_json(const ProjectivePoint& p);  // canonical integer coordinate vector
ProjectivePoint point_from_json(const Json& j);

Json to_json(const Divisor3& d);  // {"points": [...]}
Divisor3 divisor3_from_json(const Json& j);

// {"degree": k, "terms": [[i, j, k, "num/den"], ...]} with the exponent
// triples in descending lexicographic order.
Json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const Json& j);

Json to_json(const SearchReport& r);
Json to_json(const QuinticConstruction& qc);
Json to_json(const NoncollinearityReport& r);

}  // namespace symprod
