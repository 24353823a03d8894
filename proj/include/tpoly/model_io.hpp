#pragma once

#include "tpoly/orbit.hpp"

#include "json.hpp"

#include <string>

namespace tpoly {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

Json alphabet_to_json(const Alphabet& a);
AlphabetPtr alphabet_from_json(const Json& j, const std::string& path);

/* term list in descending graded-lex order:
 * [{"coeff": {"num": .., "den": ..}, "exps": {"<var>": e, ...}}, ...] */
Json polynomial_to_json(const GradedPolynomial& p);
GradedPolynomial polynomial_from_json(const Json& j, const AlphabetPtr& alpha,
                                      const std::string& path);

Json model_to_json(const RepresentationModel& m);
RepresentationModel model_from_json(const Json& j);

RepresentationModel load_model(const std::string& text);
std::string save_model(const RepresentationModel& m);

}  // namespace tpoly
