#pragma once
// Trigonometric moments of the probability measure dmu = w dtheta/(2 pi),
//
//   c_k = integral e^{-i k theta} dmu(theta),   c_{-k} = conj(c_k),  c_0 = 1,
//
// and the two inner products evaluated against the moment table:
//
//   <f,g>_C = integral conj(f) g dmu = sum_{j,k} conj(f_j) g_k c_{j-k}
//   <f,g>_R = integral f g dmu        (for real-on-circle f, g; equals <f,g>_C)
//
// The moment table doubles as the Fourier table of the weight itself
// (hat{w}_k = c_k), which the Cauchy-transform module relies on.

#include "circpoly/laurent.hpp"
#include "circpoly/weights.hpp"

#include <cstddef>
#include <vector>

namespace circpoly {

struct MomentTable {
    int n_max = 0;
    std::vector<cplx> c; // c[k] for k = 0..n_max; negative indices by conjugation

    cplx moment(int k) const; // throws std::out_of_range beyond n_max
    bool covers(int k) const { return k >= -n_max && k <= n_max; }
};

// Compute c_0..c_{n_max} by periodic trapezoid quadrature with node doubling
// until two refinements agree to tol (cap on nodes; throws on non-convergence).
// Validates c_0 = 1, conjugate symmetry, and positive definiteness of the
// (n_max+1) x (n_max+1) Toeplitz matrix [c_{j-k}].
MomentTable trig_moments(const WeightSpec& spec, int n_max, double tol = 1e-13,
                         std::size_t node_cap = std::size_t(1) << 20);

// Toeplitz positive-definiteness screen (Cholesky); throws std::domain_error
// when the moment matrix is not numerically positive definite.
void validate_moment_table(const MomentTable& m);

// <f,g>_C; throws std::out_of_range when the required moment offsets exceed
// the table (the message says how wide a table is needed).
cplx inner_complex(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m);

// <f,g>_R for real-on-circle arguments.  Throws std::invalid_argument when an
// argument is not real on the circle (tolerance 1e-11 on coefficients), and
// std::logic_error if the assembled value has imaginary residue above 1e-10.
double inner_real(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m);

double norm_real(const LaurentPoly& f, const MomentTable& m);

} // namespace circpoly
