#pragma once

// Zeros of the orthogonal trigonometric polynomials and the identities that
// connect them to the circle polynomials.
//
// A real trigonometric polynomial of order n has 2n zeros on [0, 2pi) when
// its leading harmonics do not vanish; for the orthogonal families sigma_n
// and pi_n these zeros are simple and lie on the circle.  We compute them as
// the eigenvalues of the companion matrix of q(z) = z^n p(z) and polish each
// angle with one Newton step on theta -> p(e^{i theta}).
//
// At a zero of the complementary polynomial the combinations
//   e^{i(n-1)theta} p(theta) / Phi_{2n-1}(e^{i theta})   and
//   e^{i n theta}  p(theta) / Phi*_{2n}(e^{i theta})
// collapse to constants built from a_n, b_n, beta_n, kappa_{2n}; the 2x2
// determinant of the four ratios equals -2 a_n b_n i for any choice of
// zeros.  The antipodal variants (evaluate at theta + pi against the same
// constant times (-1)^{n-1} or (-1)^n) presume the zero set is invariant
// under theta -> theta + pi; that pairing is measured, and the antipodal
// checks run only when the measured defect is tiny.

#include <cstdint>
#include <string>
#include <vector>

#include "circpoly/laurent.hpp"
#include "circpoly/opuc.hpp"
#include "circpoly/otp.hpp"

namespace circpoly {

struct ZeroSet {
    int n = 0;                      // trigonometric order (2n zeros)
    std::vector<double> angles;     // sorted ascending in [0, 2pi)
    std::vector<double> residuals;  // |p(e^{i angle})| after polishing
    double max_off_circle = 0.0;    // worst | |root| - 1 | among algebraic roots
    bool structure_violation = false;  // some root strayed off the circle > 1e-6
};

// Roots of a real-on-circle Laurent polynomial of order n >= 1 as angles.
// Throws std::invalid_argument if p is not real on the circle or has order
// < 1, std::domain_error if a leading coefficient is below 1e-12 relative.
// Off-circle roots are reported via the flags, never silently dropped.
ZeroSet trig_zeros(const LaurentPoly& p);

struct ZeroDiagnostics {
    int n = 0;
    ZeroSet sigma_zeros;  // zeros of sigma_n
    ZeroSet pi_zeros;     // zeros of pi_n
    // Smallest magnitude of either polynomial over the zeros of the other;
    // strictly positive means the two have no common zero.
    double separation = 0.0;
    // Antipodal pairing defect of each zero set: the worst distance from
    // (theta + pi) mod 2pi to the set itself.  Zero means the set is
    // invariant under the half-turn.
    double pairing_defect_sigma = 0.0;
    double pairing_defect_pi = 0.0;
    double pairing_defect = 0.0;  // max of the two
};

ZeroDiagnostics zero_diagnostics(const OtpSystem& otp, int n);

struct ZeroIdentityReport {
    int n = 0;
    // Max residuals of the constant-ratio identities over the computed zeros.
    double sigma_odd_ratio = 0.0;   // 1/a_n vs sigma over the odd monic polynomial
    double pi_odd_ratio = 0.0;      // 1/((beta_n+i) b_n) vs pi over the same
    double sigma_star_ratio = 0.0;  // 2 kap^2 a_n/(1+beta_n i) vs sigma over the reversed one
    double pi_star_ratio = 0.0;     // 2 kap^2 b_n i vs pi over the reversed one
    double ratio_spread = 0.0;      // agreement of the first ratio across zeros
    double det_residual = 0.0;      // |det + 2 a_n b_n i| over sampled zero tuples
    double family_residual = 0.0;   // e^{inx} pi_n(x) - 2 kap^2 b_n i Phi*_{2n}(e^{ix})
                                    // evaluated at the zeros of sigma_n
    bool antipodal_checked = false;
    double antipodal_residual = 0.0;  // meaningful only when antipodal_checked
    std::string note;
};

// Verifies the zero-ratio identities at level n.  The determinant check
// draws `det_samples` index tuples from a seeded generator.  Throws
// std::domain_error if a denominator falls below 1e-12 (conditioning).
ZeroIdentityReport zero_identities(const OtpSystem& otp, const OpucSystem& opuc, int n,
                                   std::uint64_t seed = 12345, int det_samples = 32);

} // namespace circpoly
