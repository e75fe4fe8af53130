#include "circpoly/bridge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace circpoly {

namespace {

const cplx kI(0.0, 1.0);

void require_level(const OtpSystem& sys, int n) {
    if (n < 1 || n > sys.n_max)
        throw std::out_of_range("bridge: level n must satisfy 1 <= n <= " +
                                std::to_string(sys.n_max) +
                                " (level-0 conventions do not bridge)");
}

OtpScalars scalars_at(const OtpSystem& sys, int n) {
    return {sys.a[static_cast<std::size_t>(n)], sys.b[static_cast<std::size_t>(n)],
            sys.beta[static_cast<std::size_t>(n)]};
}

// Scalar-form orthonormal circle polynomials built from trigonometric data:
//   phi_{2n-1}(z) = kap_{2n-1} z^{n-1} [ a sigma + (beta+i) b pi ]
//   phi_{2n}(z)   = (1/2) kap_{2n}^{-1} z^n [ a^{-1}(1-beta i) sigma + i b^{-1} pi ]
// and their reversals (conjugate the bracket scalars).
cplx phi_odd_scalar(const OtpSystem& otp, const OpucSystem& opuc, int j, cplx z) {
    const OtpScalars s = scalars_at(otp, j);
    const double kap = opuc.kappa.at(static_cast<std::size_t>(2 * j - 1));
    return kap * std::pow(z, j - 1) *
           (s.a * otp.sigma(j).eval(z) + (s.beta + kI) * s.b * otp.pi(j).eval(z));
}

cplx phi_even_scalar(const OtpSystem& otp, const OpucSystem& opuc, int j, cplx z) {
    if (j == 0) return 1.0;
    const OtpScalars s = scalars_at(otp, j);
    const double kap = opuc.kappa.at(static_cast<std::size_t>(2 * j));
    return 0.5 / kap * std::pow(z, j) *
           ((1.0 - s.beta * kI) / s.a * otp.sigma(j).eval(z) +
            kI / s.b * otp.pi(j).eval(z));
}

} // namespace

ConnectionMatrix connection_matrix(const OtpScalars& s, int n) {
    ConnectionMatrix lam;
    lam.n = n;
    lam.m11 = 1.0;
    lam.m12 = s.beta + kI;
    lam.m21 = 0.5 / (s.a * s.a) * (1.0 + s.beta * kI);
    lam.m22 = -0.5 / (s.b * s.b) * kI;
    return lam;
}

std::pair<LaurentPoly, LaurentPoly> connection_solve(const ConnectionMatrix& lam,
                                                     const LaurentPoly& u1,
                                                     const LaurentPoly& u2) {
    const cplx det = lam.det();
    if (std::abs(det) < 1e-14)
        throw std::domain_error("connection_solve: singular connection matrix");
    const cplx inv = cplx(1.0) / det;
    return {inv * (lam.m22 * u1 - lam.m12 * u2), inv * (lam.m11 * u2 - lam.m21 * u1)};
}

std::pair<LaurentPoly, LaurentPoly> opuc_from_otp(const OtpSystem& sys, int n) {
    require_level(sys, n);
    const OtpScalars s = scalars_at(sys, n);
    const LaurentPoly sigma = sys.sigma(n), pi = sys.pi(n);

    LaurentPoly phi_odd = (cplx(s.a) * sigma + (s.beta + kI) * s.b * pi).shifted(n - 1);
    LaurentPoly star_even =
        (0.5 * (1.0 + s.beta * kI) / s.a * sigma - 0.5 * kI / s.b * pi).shifted(n);

    // The trigonometric tails must cancel: anything below z^0 is a corruption.
    const double scale = std::max(1.0, phi_odd.max_abs_coeff());
    auto drop_negative = [scale](const LaurentPoly& p) {
        LaurentPoly q;
        for (int k = p.lo(); k <= p.hi(); ++k) {
            if (k < 0) {
                if (std::abs(p.coeff(k)) > 1e-10 * scale)
                    throw std::runtime_error("opuc_from_otp: identity violation - "
                                             "negative powers survive (corrupted inputs)");
            } else {
                q.set_coeff(k, p.coeff(k));
            }
        }
        return q.trimmed();
    };
    phi_odd = drop_negative(phi_odd);
    star_even = drop_negative(star_even);

    if (std::abs(phi_odd.coeff(2 * n - 1) - cplx(1.0)) > 1e-11)
        throw std::runtime_error("opuc_from_otp: identity violation - leading "
                                 "coefficient of the odd polynomial is not 1");
    // Constant term of kap^2 Phi*_{2n} equals kap_{2n}^2 =
    // (1/4)[a^{-2}(1+beta^2) + b^{-2}] (leading-coefficient relation).
    const double kap2 = 0.25 * ((1.0 + s.beta * s.beta) / (s.a * s.a) + 1.0 / (s.b * s.b));
    if (std::abs(star_even.coeff(0) - cplx(kap2)) > 1e-11 * std::max(1.0, kap2))
        throw std::runtime_error("opuc_from_otp: identity violation - constant term "
                                 "does not match the leading-coefficient relation");
    return {phi_odd, star_even};
}

OtpScalars otp_scalars_from_opuc(const OpucSystem& sys, int n) {
    if (n < 1 || 2 * n > sys.n_max)
        throw std::out_of_range("otp_scalars_from_opuc: needs circle system order 2n");
    const cplx alpha = sys.alpha.at(static_cast<std::size_t>(2 * n - 1));
    const double kap2 = sys.kappa.at(static_cast<std::size_t>(2 * n)) *
                        sys.kappa.at(static_cast<std::size_t>(2 * n));
    const double one_minus = 1.0 - alpha.real();
    if (one_minus <= 1e-12)
        throw std::domain_error("otp_scalars_from_opuc: inversion degeneracy "
                                "(1 - Re alpha too small)");
    const double a_inv2 = 2.0 * kap2 * one_minus;
    const double beta = -alpha.imag() / one_minus;
    const double b_inv2 = 4.0 * kap2 - a_inv2 * (1.0 + beta * beta);
    if (b_inv2 <= 1e-12)
        throw std::domain_error("otp_scalars_from_opuc: inversion degeneracy "
                                "(recovered b^{-2} not positive)");
    return {1.0 / std::sqrt(a_inv2), 1.0 / std::sqrt(b_inv2), beta};
}

std::pair<LaurentPoly, LaurentPoly> otp_from_opuc(const OpucSystem& sys, int n) {
    const OtpScalars s = otp_scalars_from_opuc(sys, n);
    const ConnectionMatrix lam = connection_matrix(s, n);
    const double kap2 = sys.kappa.at(static_cast<std::size_t>(2 * n)) *
                        sys.kappa.at(static_cast<std::size_t>(2 * n));
    const LaurentPoly u1 = sys.phi.at(static_cast<std::size_t>(2 * n - 1)).shifted(-n + 1);
    const LaurentPoly u2 =
        (cplx(kap2) * sys.phi_star.at(static_cast<std::size_t>(2 * n))).shifted(-n);
    auto [t1, t2] = connection_solve(lam, u1, u2);
    return {(1.0 / s.a) * t1, (1.0 / s.b) * t2};
}

double recurrence_residual(const OtpSystem& otp, const OpucSystem& opuc, int n, cplx z) {
    require_level(otp, n + 1);
    if (n < 1) throw std::out_of_range("recurrence_residual: valid for n >= 1");
    if (2 * n + 1 > opuc.n_max)
        throw std::out_of_range("recurrence_residual: needs circle system order 2n+1");
    const OtpScalars s = scalars_at(otp, n);
    const OtpScalars t = scalars_at(otp, n + 1);
    const double kap2 = opuc.kappa.at(static_cast<std::size_t>(2 * n)) *
                        opuc.kappa.at(static_cast<std::size_t>(2 * n));
    const cplx abar = std::conj(opuc.alpha.at(static_cast<std::size_t>(2 * n)));

    const cplx lhs = t.a * otp.sigma(n + 1).eval(z) +
                     (t.beta + kI) * t.b * otp.pi(n + 1).eval(z);
    const cplx rhs = 0.5 / kap2 / s.a * (z * (1.0 - s.beta * kI) - abar * (1.0 + s.beta * kI)) *
                         otp.sigma(n).eval(z) +
                     0.5 * kI / kap2 / s.b * (z + abar) * otp.pi(n).eval(z);
    return std::abs(lhs - rhs);
}

CdValues cd_values(const OtpSystem& otp, const OpucSystem& opuc, int n, cplx zeta, cplx z) {
    if (std::abs(std::conj(zeta) * z - cplx(1.0)) < 1e-12)
        throw std::domain_error("cd_values: conj(zeta) * z is on the singular diagonal");
    if (n < 1 || n > otp.n_max || 2 * n + 1 > opuc.n_max)
        throw std::out_of_range("cd_values: level out of range for the given systems");

    CdValues v{};
    v.s_odd = 0.0;
    v.s_even = 1.0;      // index-0 term: |phi_0|^2 = 1, served from the circle side
    v.s_even_prev = 1.0; // (the level-0 scalar conventions would give 1/4)
    for (int j = 1; j <= n; ++j) {
        v.s_odd += std::conj(phi_odd_scalar(otp, opuc, j, zeta)) *
                   phi_odd_scalar(otp, opuc, j, z);
        const cplx even = std::conj(phi_even_scalar(otp, opuc, j, zeta)) *
                          phi_even_scalar(otp, opuc, j, z);
        v.s_even += even;
        if (j <= n - 1) v.s_even_prev += even;
    }
    v.d_odd = std::conj(opuc.orthonormal_star(2 * n + 1, zeta)) *
                  opuc.orthonormal_star(2 * n + 1, z) -
              std::conj(opuc.orthonormal(2 * n + 1, zeta)) * opuc.orthonormal(2 * n + 1, z);
    v.d_even = std::conj(opuc.orthonormal_star(2 * n, zeta)) *
                   opuc.orthonormal_star(2 * n, z) -
               std::conj(opuc.orthonormal(2 * n, zeta)) * opuc.orthonormal(2 * n, z);
    return v;
}

cplx published_d_odd(const OtpSystem& otp, const OpucSystem& opuc, int n, cplx zeta, cplx z) {
    require_level(otp, n + 1);
    const OtpScalars t = scalars_at(otp, n + 1);
    const double kap = opuc.kappa.at(static_cast<std::size_t>(2 * n + 1));
    const cplx sz = otp.sigma(n + 1).eval(z), pz = otp.pi(n + 1).eval(z);
    const cplx szeta = otp.sigma(n + 1).eval(zeta), pzeta = otp.pi(n + 1).eval(zeta);
    return -2.0 * kI * kap * kap * t.a * t.b * std::pow(std::conj(zeta), n) *
           std::pow(z, n) * (std::conj(szeta) * pz - std::conj(pzeta) * sz);
}

cplx published_d_even(const OtpSystem& otp, const OpucSystem& opuc, int n, cplx zeta, cplx z) {
    require_level(otp, n);
    const OtpScalars s = scalars_at(otp, n);
    const double kap2 = opuc.kappa.at(static_cast<std::size_t>(2 * n)) *
                        opuc.kappa.at(static_cast<std::size_t>(2 * n));
    const cplx sz = otp.sigma(n).eval(z), pz = otp.pi(n).eval(z);
    const cplx szeta = otp.sigma(n).eval(zeta), pzeta = otp.pi(n).eval(zeta);
    return -kI / kap2 / (s.a * s.b) * std::pow(std::conj(zeta), n) * std::pow(z, n) *
           (std::conj(szeta) * pz - std::conj(pzeta) * sz);
}

} // namespace circpoly
