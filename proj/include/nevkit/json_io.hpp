#pragma once

#include "nevkit/classify.hpp"
#include "nevkit/oracle.hpp"
#include "nevkit/realize.hpp"

#include <json.hpp>

#include <string>

namespace nevkit {

// std::map-backed, so keys come out sorted.
using Json = nlohmann::json;

Json to_json(const Rational& x);
Json to_json(const ExtReal& x);
Json to_json(const Limit& l);
Json to_json(const Poly& p);
// Coefficients plus the real zero and pole lists (infinity included).
Json to_json(const RatFun& r);
Json to_json(const NevFun& q);
Json to_json(const MultiplicityRecord& rec);
Json to_json(const GenNevFun& g);
Json to_json(const L2Model& m);
Json to_json(const CanonicalRational& c);
Json to_json(const ClassReport& rep);
Json to_json(const FactorChain& chain);
Json to_json(const N00Report& rep);
Json to_json(const KacClosure& k);
Json to_json(const RealizationTransformReport& rep);
Json to_json(const NegativeSquaresReport& rep, const NegativeSquaresConfig& cfg);
Json to_json(const InversionResult& res, const InversionConfig& cfg);

// Readers throw ParseError for malformed values and SchemaMismatch for missing or
// mistyped fields.
Rational rational_from_json(const Json& j);
ExtReal ext_real_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);
NevFun nevfun_from_json(const Json& j);
GenNevFun gen_from_json(const Json& j);
L2Model model_from_json(const Json& j);

enum class DocKind { ratfun, nevfun, gen_nevfun, model };
// By keys: "phi" (generalized), "alpha"/"atoms" (Nevanlinna), "omega" (model), "num" (rational).
DocKind detect_kind(const Json& j);

Json parse_json(const std::string& text);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace nevkit
