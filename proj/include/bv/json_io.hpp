// JSON encodings for diagrams and reports. Numbers in diagram JSON must be
// JSON integers; rationals travel as "num/den" strings.
#pragma once

#include "bv/decision.hpp"
#include "bv/diagram.hpp"
#include "bv/k0.hpp"
#include "bv/ordered.hpp"
#include "bv/supernatural.hpp"
#include "bv/toeplitz.hpp"

#include <json.hpp>

#include <string>

namespace bv {

using Json = nlohmann::ordered_json;

/// Parses text; malformed JSON becomes Error(InvalidInput).
Json parse_json_text(const std::string& text);

/// {"levels":[{"matrix":[[..]],"order":...}], "tail":{"repeat":[..]}, "alphabet":[..]}
/// "order" is "left-right" (the default) or one list of [source, copy] pairs
/// per vertex. Other keys are ignored. Throws InvalidInput on floats, negative numbers
/// and shape errors; construction errors propagate unchanged.
OrderedDiagram ordered_diagram_from_json(const Json& j);
BratteliDiagram diagram_from_json(const Json& j);

/// Canonical form: "order" only where it differs from left-right, "tail" and
/// "alphabet" only when present. Throws Overflow for entries beyond 64 bits.
Json to_json(const OrderedDiagram& ordered);
Json to_json(const BratteliDiagram& diagram);

Json integer_json(const BigInt& v);
Json to_json(const Matrix& m);
Json to_json(const IntVector& v);
Json rational_json(const Rational& r);

/// "yes" | "no" | {"unknown":depth}
Json to_json(const Decision& d);
/// "positive" | "negative" | "zero" | {"unknown":depth}
Json to_json(const Positivity& p);
/// {"finite":{"2":2},"infinite":[3]}
Json to_json(const SupernaturalNumber& n);
/// {"level":2,"vector":[1,-1]}
Json to_json(const K0Element& g);
K0Element k0_element_from_json(const Json& j);
Json to_json(const PeriodReport& report);

}  // namespace bv
