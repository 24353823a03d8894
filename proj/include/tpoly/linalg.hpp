#pragma once

#include "tpoly/modular.hpp"
#include "tpoly/substitution.hpp"

#include <string>
#include <vector>

namespace tpoly {

/* exact determinant by memoized minor expansion */
GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m);

enum class SolveStatus { Unique, NonUnique, Inconsistent };

/* one linear condition on the unknown polynomial x: map(x) = rhs */
struct EquationBlock {
    Substitution map;
    GradedPolynomial rhs;
    std::string label;
};

struct LinearSolution {
    SolveStatus status = SolveStatus::Unique;
    GradedPolynomial particular;
    std::vector<GradedPolynomial> kernel;
    std::size_t kernel_dim = 0;
    std::size_t num_equations = 0;
    std::size_t num_unknowns = 0;
    std::string witness;  // failing block when inconsistent

    LinearSolution() : particular(nullptr) {}
};

/* Exact solve for a homogeneous degree-d unknown over the monomial basis.
 * Small systems run plain rational elimination; large ones run modular
 * elimination with rational reconstruction, and every reconstructed result
 * is certified against the original blocks with exact arithmetic. */
LinearSolution linear_solve(const AlphabetPtr& alpha, int degree,
                            const std::vector<EquationBlock>& blocks);

/* in-place reduced row echelon form; returns pivot columns */
std::vector<std::size_t> rref_exact(std::vector<std::vector<Rational>>& rows);

}  // namespace tpoly
