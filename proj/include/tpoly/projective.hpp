#pragma once

#include "tpoly/orbit.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpoly {

/* data of the scalar one-parameter subgroup: per-factor root weights and the
 * exponent q with which it scales the representation */
struct ScalarData {
    long q = 1;
    std::map<std::string, std::vector<long>> weights;
};

ScalarData scalar_data(const ScalarPreset& preset);

/* Thom polynomial of the projectivized orbit closure, over the ambient
 * classes extended by the degree-1 hyperplane class xi.  The affine tp is
 * solved on demand unless supplied. */
GradedPolynomial projective_tp(const RepresentationModel& model, const std::string& orbit,
                               const ScalarData& sd,
                               const std::optional<GradedPolynomial>& tp = std::nullopt);

/* degree of the projectivized orbit closure: q^{-d} tp(weights) */
Integer projective_degree(const RepresentationModel& model, const std::string& orbit,
                          const ScalarData& sd,
                          const std::optional<GradedPolynomial>& tp = std::nullopt);

/* coefficient of xi^power, as a polynomial with the xi variable erased */
GradedPolynomial xi_coefficient(const GradedPolynomial& p, int power);

}  // namespace tpoly
