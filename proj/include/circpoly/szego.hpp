#pragma once
// Scalar factorization D+ D- = w on the circle, spectral Cauchy transforms,
// the 2x2 boundary-value matrix Y, and asymptotic residual sweeps.
//
// With l_k the Fourier coefficients of log w (l_{-k} = conj(l_k)):
//
//   interior D(z) = exp( sum_{k>=0} l_k z^k )
//   exterior D(z) = exp( sum_{k<0}  l_k z^k )         so D(inf) = 1
//   boundary D(t) = exterior boundary value = exp( sum_{k<0} l_k t^k )
//
// and D+(t) D-(t) = exp(sum_k l_k t^k) = w(t).
//
// Cauchy transforms are computed spectrally, never by quadrature near the
// circle: for a density f with Fourier coefficients f_k,
//
//   C[f](z) = sum_{k>=0} f_k z^k         for |z| < 1,
//   C[f](z) = -sum_{k<0} f_k z^k         for |z| > 1,
//   C+-[f](t) = the same sums on |t| = 1 (Plemelj: C+ - C- = f).
//
// Densities are Laurent polynomials times the weight; their Fourier
// coefficients are the convolution f_k = sum_j p_j c_{k-j} with the weight's
// own Fourier table (= the moment table).
//
// The matrix Y solves the boundary-value problem
//
//   Y+(t) = [[1, 0], [t^{-2n} w(t), 1]] Y-(t),   |t| = 1,
//   diag(z^{-2n}, z^{2n-1}) Y(z) -> I at infinity,   Y11(0) = Y12(0) = 0,
//
// and is assembled in two equivalent forms: from the circle polynomials
//
//   Y = [ z Phi_{2n-1}(z)                    -kap_{2n-2}^2 z Phi*_{2n-2}(z)  ]
//       [ C[t^{-2n+1} Phi_{2n-1} w](z)       -kap_{2n-2}^2 C[t^{-2n+1} Phi*_{2n-2} w](z) ]
//
// or from the trigonometric system via the bridge combinations (levels n and
// n-1).  Both rows of column 2 at level 0 are served from the circle side
// (Phi*_0 = 1).

#include "circpoly/bridge.hpp"
#include "circpoly/laurent.hpp"
#include "circpoly/moments.hpp"
#include "circpoly/opuc.hpp"
#include "circpoly/otp.hpp"
#include "circpoly/weights.hpp"

#include <cstddef>
#include <vector>

namespace circpoly {

struct SzegoFunction {
    WeightSpec weight;
    int trunc_order = 0;      // K: retained orders |k| <= K
    double tail_bound = 0.0;  // magnitude of the last retained coefficient
    std::vector<cplx> ell;    // l_0..l_K of log w; l_{-k} = conj(l_k)

    cplx ell_at(int k) const;
};

// Fourier-analyze log w, doubling K until the tail drops below tail_tol.
SzegoFunction build_szego(const WeightSpec& spec, double tail_tol = 1e-13,
                          std::size_t node_cap = std::size_t(1) << 20);

enum class Region { interior, exterior, boundary };

// D per the conventions above; throws std::domain_error when the region does
// not match |z| (interior |z| < 1, exterior |z| > 1, boundary within 1e-12).
cplx szego_d(const SzegoFunction& sf, cplx z, Region region);

// Interior-side boundary value exp( sum_{k>=0} l_k t^k ) = w(t)/D-(t).
// Diagnostic partner of the boundary case above (their product is w).
cplx szego_d_boundary_interior(const SzegoFunction& sf, cplx t);

// Fourier coefficient f_k of the density p(t) w(t) via convolution with the
// weight's Fourier table; the table must cover k - p-range.
cplx density_fourier(const LaurentPoly& p, const MomentTable& wide, int k);

// C[p w](z) off the circle by the Fourier split.  Throws std::domain_error
// when |z| is within 1e-12 of 1 (use the boundary version) or z = 0 exactly
// with nothing to sum is fine (returns f_0 term of the interior sum).
cplx cauchy_transform(const LaurentPoly& p, const MomentTable& wide, cplx z);
// Boundary values C+ (plus = true) and C- on |t| = 1.
cplx cauchy_transform_boundary(const LaurentPoly& p, const MomentTable& wide, cplx t,
                               bool plus);

// Widened moment table for Cauchy/Szego work: grows n_max until the trailing
// coefficients fall below tail_tol (weights here are analytic, so the decay
// is geometric).
// The default tolerance sits just above the quadrature rounding floor
// (~2e-16 for order-one weights), so certification terminates.
MomentTable wide_moments(const WeightSpec& spec, int min_n, double tail_tol = 1e-15);

enum class YForm { otp, opuc };
enum class YSide { interior, exterior, boundary_plus, boundary_minus };

struct RhpMatrix {
    int n = 0;
    YSide side = YSide::interior;
    cplx y11, y12, y21, y22;
};

// Assemble Y at an off-circle point (side deduced from |z|) for n >= 1.
RhpMatrix assemble_y(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                     const MomentTable& wide, int n, cplx z);
// Assemble the one-sided boundary values Y+ / Y- at |t| = 1.
RhpMatrix assemble_y_boundary(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                              const MomentTable& wide, int n, cplx t, bool plus);

// Max entrywise residual of Y+ - G Y- with G = [[1,0],[t^{-2n} w(t),1]] over
// equispaced boundary samples.
double verify_y_jump(const OtpSystem& otp, const OpucSystem& opuc,
                     const MomentTable& wide, const WeightSpec& weight, int n,
                     int samples);

// Mean of diag(z^{-2n}, z^{2n-1}) Y(z) entrywise over a circle |z| = radius
// (the circle mean of a Laurent series is its constant coefficient, which the
// normalization pins to the identity matrix).  The polynomial first row is
// averaged over `samples` points; the Cauchy-transform second row's mean is
// radius-independent and is read off the Fourier data, because sampling scales
// the analytically-zero coefficients by radius^{2n-2} and their cancellation
// survives only in exact arithmetic.
RhpMatrix y_principal_part(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                           const MomentTable& wide, int n, double radius, int samples);

struct RateReport {
    std::vector<int> n_values;
    std::vector<double> residuals;
    double fitted_rate = 0.0;  // least-squares slope of log residual vs n
    double c2_reference = 0.0; // log(1 + 3 eps / 2)
    bool monotone = false;     // strictly decreasing over the computed range
};

enum class AsympKind { exterior, interior, boundary };

// Max-over-points normalized residuals of the strong asymptotics, per n:
//   exterior: | z^{-n} D(z) [ a_n sigma_n + (beta_n + i) b_n pi_n ](z) - 1 |
//   interior: | (1/2) z^n D(z) [ a_n^{-1}(1+beta_n i) sigma_n - i b_n^{-1} pi_n ](z) - 1 |
//   boundary: the exterior form with the boundary D on |t| = 1.
RateReport asymptotic_residuals(const OtpSystem& otp, const SzegoFunction& sf,
                                AsympKind kind, const std::vector<cplx>& points,
                                int n_lo, int n_hi);

// The matching circle-side residual | z^{1-2n} D(z) Phi_{2n-1}(z) - 1 |
// (cross-check partner of the exterior form above).
double opuc_szego_residual(const OpucSystem& opuc, const SzegoFunction& sf, int n, cplx z);

} // namespace circpoly
