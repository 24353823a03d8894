#pragma once

#include "tpoly/orbit.hpp"
#include "tpoly/schur.hpp"

namespace tpoly {

/* GL(n) x GL(n+k) on Hom(C^n, C^(n+k)); orbits Sigma_s by corank */
RepresentationModel catalog_porteous(int n, int k);

enum class BilinearKind { Antisymmetric, Symmetric };

/* GL(n) on Lambda^2 C^n or S^2 C^n; orbits Sigma{r} by corank */
RepresentationModel catalog_bilinear(BilinearKind kind, int n);

/* GL(2) on S^n C^2; orbits eta0..eta[n/2] of the <=2-root polynomials.
 * Marked partial: the moduli families of generic orbits are omitted. */
RepresentationModel catalog_gl2_sn(int n);

/* contact orbits A_m of E^0(1, k+1), m = 0..m_max */
RepresentationModel catalog_contact_an(int k, int m_max);

AlphabetPtr contact_ambient_alphabet(int k);

/* prod_{j=0..k} prod_{i=1..m} (b_j - i a) expanded into target classes */
GradedPolynomial closed_form_an(int m, int k);

/* the determinantal Thom polynomial of Sigma_s in class series H, i.e. the
 * rectangle Schur polynomial with s rows of width s+k */
GradedPolynomial porteous_determinant(const Series& h, int s, int k);

}  // namespace tpoly
