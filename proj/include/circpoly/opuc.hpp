#pragma once
// Monic orthogonal polynomials on the unit circle via the Szego recurrence
//
//   Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi*_n(z),
//   Phi*_n(z)    = z^n conj(Phi_n(1/conj z))        (coefficient reversal),
//   alpha_n      = -conj(Phi_{n+1}(0)),             |alpha_n| < 1,
//
// with leading coefficients kappa_n = <Phi_n, Phi_n>^{-1/2} of the
// orthonormal family phi_n = kappa_n Phi_n.  Also provides the CMV Laurent
// bases and the Christoffel-Darboux kernel in closed form and as the direct
// sum (each the other's cross-check).

#include "circpoly/laurent.hpp"
#include "circpoly/moments.hpp"

#include <utility>
#include <vector>

namespace circpoly {

struct OpucSystem {
    int n_max = 0;
    MomentTable moments;
    std::vector<LaurentPoly> phi;      // monic Phi_0..Phi_{n_max}
    std::vector<LaurentPoly> phi_star; // reversals Phi*_0..Phi*_{n_max}
    std::vector<cplx> alpha;           // alpha_0..alpha_{n_max-1}
    std::vector<double> kappa;         // kappa_0..kappa_{n_max}

    cplx orthonormal(int n, cplx z) const;      // phi_n(z) = kappa_n Phi_n(z)
    cplx orthonormal_star(int n, cplx z) const; // phi*_n(z)
};

// Runs the recurrence against the moment table.  Throws std::domain_error
// with a measure-degeneracy message when some |alpha_n| >= 1 - 1e-12, and
// std::out_of_range when the table is too narrow (needs |k| <= n_max).
OpucSystem build_opuc(const MomentTable& m, int n_max);

// Reversal of p treated as a polynomial of degree n: z^n conj(p(1/conj z)).
LaurentPoly reversed(const LaurentPoly& p, int degree);

// CMV Laurent bases: chi_n orthogonalizes {1, z, z^-1, z^2, ...}, x_n
// orthogonalizes {1, z^-1, z, z^-2, ...}; x_n(z) = conj(chi_n(1/conj z)).
LaurentPoly cmv_chi(const OpucSystem& sys, int n);
LaurentPoly cmv_x(const OpucSystem& sys, int n);

// Christoffel-Darboux kernel K_n(zeta, z) = sum_{j=0..n} conj(phi_j(zeta)) phi_j(z).
// Closed form with the (n+1)-level reversals; throws std::domain_error when
// |conj(zeta) z - 1| < 1e-12 (kernel evaluated by the singular quotient).
cplx cd_kernel_opuc(const OpucSystem& sys, int n, cplx zeta, cplx z);
// Variant closed form using level-n polynomials only.
cplx cd_kernel_opuc_alt(const OpucSystem& sys, int n, cplx zeta, cplx z);
// Direct orthonormal sum (oracle for the closed forms).
cplx cd_kernel_opuc_sum(const OpucSystem& sys, int n, cplx zeta, cplx z);

} // namespace circpoly
