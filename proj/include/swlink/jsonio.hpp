/**
 * @file jsonio.hpp
 * @brief Stable JSON encodings for polynomials, blocks, triples, and
 *        verdicts. Objects use a fixed key order and polynomials a fixed
 *        term order, so equal values serialize to identical bytes.
 */
#ifndef SWLINK_JSONIO_HPP
#define SWLINK_JSONIO_HPP

#include <json.hpp>

#include "swlink/family.hpp"
#include "swlink/laurent.hpp"
#include "swlink/obstruct.hpp"
#include "swlink/present.hpp"
#include "swlink/swring.hpp"

namespace swlink {

using Json = nlohmann::ordered_json;

/// {"vars":[...],"terms":[{"exp":[...],"coef":"<decimal>"},...]},
/// terms in lexicographic-descending exponent order.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json block_to_json(const ManifoldBlock& m);
ManifoldBlock block_from_json(const Json& j);

Json triple_to_json(const SurgeryBasisTriple& t);
SurgeryBasisTriple triple_from_json(const Json& j);

Json family_verdict_to_json(const FamilyVerdict& v);
Json obstruction_verdict_to_json(const ObstructionVerdict& v);

Json presentation_to_json(const GroupPresentation& p);

/// Parse a JSON document, converting parse failures to ParseError.
Json parse_json(const std::string& text, const std::string& what);

} // namespace swlink

#endif
