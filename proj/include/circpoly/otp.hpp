#pragma once
// Orthonormal trigonometric (Laurent) polynomials: ordered Gram-Schmidt over
//
//   first system:   { 1, sin th, cos th, sin 2th, cos 2th, ... }
//   second system:  { 1, cos th, sin th, cos 2th, sin 2th, ... }
//
// under <f,g> = integral f g dmu.  Elements come in levels: level k >= 1
// contributes the odd-position element (index 2k-1) and the even-position
// element (index 2k).  For the first system the normalized results are pi_k
// (from sin k th) and sigma_k (from cos k th), with scalars
//
//   b_k   = residual norm at the odd step,
//   a_k   = residual norm at the even step,
//   beta_k = <cos-element, pi_k> / b_k,
//
// so that  a_k sigma_k = cos k th - beta_k b_k pi_k + (order <= k-1).
// The second system swaps the roles (its scalars are conventionally named
// c_k, d_k, gamma_k; they are stored in the same fields).  Conventions:
// sigma_0 = 1, pi_0 = 0, beta_0 = 0, a_0 = b_0 = 1.

#include "circpoly/laurent.hpp"
#include "circpoly/moments.hpp"

#include <vector>

namespace circpoly {

enum class OtpFamily { first, second };
enum class OtpKind { sigma, pi }; // even-position / odd-position normalized element

// Basis element n of the chosen family as a Laurent polynomial:
// n = 0 -> 1;  n = 2k-1 / 2k -> sin or cos of k th per the family's ordering.
LaurentPoly basis_element(OtpFamily family, int n);

struct OtpSystem {
    OtpFamily family = OtpFamily::first;
    int n_max = 0;
    MomentTable moments;
    std::vector<LaurentPoly> ortho; // orthonormal elements, indices 0..2*n_max
    // Scalars indexed 0..n_max with the out-of-band conventions at 0.
    std::vector<double> a, b, beta;

    LaurentPoly sigma(int k) const; // k = 0 -> 1 (convention)
    LaurentPoly pi(int k) const;    // k = 0 -> 0 (convention)
};

// Sequential modified Gram-Schmidt with one reorthogonalization pass.
// Throws std::domain_error when a residual norm falls below 1e-12
// (numerically degenerate measure); std::out_of_range when the moment table
// is narrower than 2*n_max.
OtpSystem gram_schmidt(const MomentTable& m, OtpFamily family, int n_max);

// Evaluate sigma_k or pi_k at z; when |z| = 1 asserts the value is real
// within 1e-12 (relative) and throws std::logic_error otherwise.
cplx eval_otp(const OtpSystem& sys, OtpKind which, int k, cplx z);

// Magnitude of the z^{+-k} components of a_k sigma_k - (cos-element) +
// beta_k b_k pi_k (first system; the second system's analogue swaps sin/cos).
// Must vanish: the combination has order <= k-1.
double structure_residual(const OtpSystem& sys, int k);

} // namespace circpoly
