#pragma once

#include <string>

#include <json.hpp>

#include "gotzrep/combinatorics.hpp"
#include "gotzrep/errors.hpp"
#include "gotzrep/integer.hpp"
#include "gotzrep/lex.hpp"
#include "gotzrep/monomial.hpp"
#include "gotzrep/numpoly.hpp"
#include "gotzrep/resolution.hpp"

namespace gotzrep {

struct CheckReport;

/// Malformed input; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json to_json(const Integer& x);
/// Rationals are always strings "p/q" (or "p").
Json to_json(const Rational& x);
Json to_json(const NumPoly& p);
Json to_json(const MacaulayRep& rep);
Json to_json(const GotzmannRep& g);
Json to_json(const AdjustedGotzmannRep& rep);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const GradedFreeModule& f);
Json to_json(const MonomialSubmodule& module);
Json to_json(const HilbertSeries& hs);
Json to_json(const BettiTable& table);
Json to_json(const EmbeddingDims& dims);
Json to_json(const CheckReport& report);

Integer integer_from_json(const Json& j, const std::string& field);
Rational rational_from_json(const Json& j, const std::string& field);
Monomial monomial_from_string(const std::string& text, int n);
/// {"coeffs": [...]} or {"terms": [{"a": 2, "shift": 3, "mult": 2}, ...]},
/// the latter meaning sum of mult * C(d + shift, a).
NumPoly poly_from_json(const Json& j);
GotzmannRep gotzmann_from_json(const Json& j);
MonomialIdeal ideal_from_json(const Json& j, int n, const std::string& field = "ideal");
GradedFreeModule module_shape_from_json(const Json& j);
MonomialSubmodule module_from_json(const Json& j);
HilbertFunctionSpec hilbert_function_from_json(const Json& j);
BettiTable betti_from_json(const Json& j);

/// Parses `text` as inline JSON when it starts with '{' or '[', otherwise
/// reads it as a file path.
Json load_json_argument(const std::string& text);

}  // namespace gotzrep
