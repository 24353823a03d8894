#pragma once

#include "tpoly/linalg.hpp"
#include "tpoly/orbit.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tpoly {

struct TpDiagnostics {
    std::size_t num_equations = 0;
    std::size_t num_unknowns = 0;
    std::size_t kernel_dim = 0;
    std::vector<std::string> orbits_used;
};

struct TpResult {
    std::string orbit;
    int degree = 0;
    GradedPolynomial polynomial;
    TpDiagnostics diagnostics;
    /* kernel basis of the homogeneous part when the system is not unique */
    std::vector<GradedPolynomial> kernel;

    bool unique() const { return diagnostics.kernel_dim == 0; }
};

struct SolveOptions {
    /* drop the principal equation; the solution space then contains tp */
    bool include_principal = true;
};

/* Assemble and solve the restriction equations for the orbit: the principal
 * equation at the orbit plus homogeneous equations at every other orbit of
 * codimension <= codim(orbit). */
TpResult solve_tp(const RepresentationModel& model, const std::string& orbit,
                  const SolveOptions& opts = {});

enum class EquationKind { Principal, Homogeneous, Closure };

struct VerifyEntry {
    std::string orbit;
    EquationKind kind = EquationKind::Homogeneous;
    bool passed = false;
    GradedPolynomial residual;
};

struct VerifyReport {
    bool all_passed = true;
    std::vector<VerifyEntry> entries;
};

VerifyReport verify_tp(const RepresentationModel& model, const std::string& orbit,
                       const GradedPolynomial& candidate);

GradedPolynomial restrict_to_orbit(const RepresentationModel& model, const std::string& orbit,
                                   const GradedPolynomial& p);

struct IdealMembership {
    bool contains = true;
    std::string witness_orbit;  // first orbit outside the closure with nonzero image
    GradedPolynomial residual;

    IdealMembership() : residual(nullptr) {}
};

/* p lies in the avoiding ideal of the orbit iff it restricts to zero on
 * every orbit outside the orbit's closure */
IdealMembership avoiding_ideal_contains(const RepresentationModel& model,
                                        const std::string& orbit, const GradedPolynomial& p);

enum class QuotientStatus { InSubring, NotInSubring };

struct QuotientForm {
    QuotientStatus status = QuotientStatus::InSubring;
    GradedPolynomial q;  // over h_1..h_d
    AlphabetPtr h_alphabet;
    bool rank_truncated = false;  // numerator rank below the degree
    bool unique = true;

    QuotientForm() : q(nullptr) {}
};

/* Rewrite p, homogeneous over a two-factor (denominator, numerator) class
 * alphabet, as a polynomial in the quotient-series variables h_1..h_d. */
QuotientForm quotient_reduce(const GradedPolynomial& p);

/* substitute the ambient quotient-series values back into an h-polynomial */
GradedPolynomial quotient_expand(const GradedPolynomial& q, const AlphabetPtr& ambient);

/* truncation to lower ranks: kills a_i for i > n and b_i for i > nk */
GradedPolynomial unfold_pullback(const GradedPolynomial& p, int n, int nk);

}  // namespace tpoly
