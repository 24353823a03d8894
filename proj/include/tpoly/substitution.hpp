#pragma once

#include "tpoly/polynomial.hpp"

#include <vector>

namespace tpoly {

/* Degree-preserving ring homomorphism given by generator images: the image
 * of a degree-k variable is homogeneous of degree k or zero. */
class Substitution {
public:
    Substitution(AlphabetPtr source, AlphabetPtr target, std::vector<GradedPolynomial> images);

    static Substitution identity(const AlphabetPtr& alpha);

    const AlphabetPtr& source() const { return source_; }
    const AlphabetPtr& target() const { return target_; }
    const GradedPolynomial& image(std::size_t i) const { return images_[i]; }
    const std::vector<GradedPolynomial>& images() const { return images_; }

    GradedPolynomial apply(const GradedPolynomial& p) const;
    GradedPolynomial operator()(const GradedPolynomial& p) const { return apply(p); }

    /* every image is a distinct single variable with coefficient 1 and the
     * map var -> var is a bijection onto the target */
    bool is_renaming() const;
    /* inverse of a renaming */
    Substitution inverse_renaming() const;

    Substitution composed_with(const Substitution& inner) const;  // this ∘ inner

private:
    AlphabetPtr source_;
    AlphabetPtr target_;
    std::vector<GradedPolynomial> images_;
};

}  // namespace tpoly
