#pragma once

#include "tpoly/partitions.hpp"
#include "tpoly/polynomial.hpp"
#include "tpoly/substitution.hpp"

#include <map>
#include <string>
#include <vector>

namespace tpoly {

/* A total class broken up by degree: series[i] is the homogeneous degree-i
 * component and series[0] the constant term (normally 1).  Indices past the
 * end are zero. */
using Series = std::vector<GradedPolynomial>;

Series variable_series(const AlphabetPtr& alpha, const std::vector<std::string>& names);
const GradedPolynomial& series_at(const Series& s, int i, const GradedPolynomial& zero);
GradedPolynomial series_sum(const Series& s);

/* Jacobi-Trudi determinant det(c_{lambda_i + j - i}) in the complete-class
 * convention; entries with negative index are zero, index 0 is classes[0]. */
GradedPolynomial schur(const Partition& lambda, const Series& classes);

/* H with (sum denom)*(sum H) = sum numer up to max_degree; H[0] = 1 */
Series quotient_series(const Series& numer, const Series& denom, int max_degree);

/* Rewrite a polynomial that is symmetric in each root factor into elementary
 * symmetric class variables.  class_names maps a root factor tag to the
 * target names of e_1..e_m; other source variables pass through by name. */
GradedPolynomial roots_to_classes(const GradedPolynomial& p, const AlphabetPtr& target,
                                  const std::map<std::string, std::vector<std::string>>& class_names);

/* e_i of the given source variables */
GradedPolynomial elementary_symmetric(const AlphabetPtr& alpha,
                                      const std::vector<std::size_t>& vars, int i);

}  // namespace tpoly
