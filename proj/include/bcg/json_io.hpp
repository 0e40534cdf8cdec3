#pragma once

// JSON encodings shared by the CLI and the test fixtures.
//
//   group            {"orders":[2,0,3]}
//   element          {"coeffs":[1,-2,0]}
//   bilinear form    {"source":G,"target":M,"matrix":[[elem,...],...]}
//   quadratic form   {"source":G,"target":M,"diag":[elem,...],"offdiag":{"i,j":elem}}
//   table cocycle    {"group":G,"coeffs":M,"h":{"x|y|z":elem},"c":{"x|y":elem}}
//   structured       {"group":G,"coeffs":M,"h":"zero",
//                     "c":{"bilinear":matrix,"correction":[elem,...],"basis":[[0,1],...]}}
//
// Table keys write each element as comma-separated coefficients. Entries with
// a zero argument and zero value are omitted. "basis" is only emitted for a
// non-standard basis of G/2G.

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "bcg/abgroup.hpp"
#include "bcg/cocycle.hpp"
#include "bcg/forms.hpp"
#include "bcg/model.hpp"
#include "bcg/strictify.hpp"

namespace bcg::json_io {

using nlohmann::json;

json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const json& j);

json to_json(const Element& x);
Element element_from_json(const json& j, const FgAbGroup& group);

json to_json(const BilinearForm& t);
BilinearForm bilinear_from_json(const json& j);

json to_json(const QuadraticForm& q);
QuadraticForm quadratic_from_json(const json& j);

json to_json(const AbelianCocycle3& kappa);
AbelianCocycle3 cocycle_from_json(const json& j);

json to_json(const CoboundaryWitness& k);
CoboundaryWitness witness_from_json(const json& j);

json to_json(const Homomorphism& f);
json to_json(const Mod2Homomorphism& f);
json to_json(const ValidationReport& r);
json to_json(const CoherenceReport& r);
json to_json(const PolarCoverResult& r);

/// {"x": value} over enumerate(group); for infinite groups over the box.
json table_to_json(std::span<const Element> domain, std::span<const Element> values);
/// Inverse of table_to_json on a finite group: one entry per element.
std::vector<Element> table_from_json(const json& j, const FgAbGroup& group, const FgAbGroup& coeffs);

/// Parses text, turning syntax errors into ParseError with line/column.
json parse(const std::string& text, const std::string& origin);

}  // namespace bcg::json_io
