#include "circpoly/opuc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace circpoly {

LaurentPoly reversed(const LaurentPoly& p, int degree) {
    if (!p.is_zero() && (p.lo() < 0 || p.hi() > degree))
        throw std::invalid_argument("reversed: polynomial exceeds the stated degree");
    return p.star(degree);
}

cplx OpucSystem::orthonormal(int n, cplx z) const {
    return kappa.at(static_cast<std::size_t>(n)) * phi.at(static_cast<std::size_t>(n)).eval(z);
}

cplx OpucSystem::orthonormal_star(int n, cplx z) const {
    return kappa.at(static_cast<std::size_t>(n)) *
           phi_star.at(static_cast<std::size_t>(n)).eval(z);
}

OpucSystem build_opuc(const MomentTable& m, int n_max) {
    if (n_max < 0) throw std::invalid_argument("build_opuc: n_max must be >= 0");
    if (m.n_max < n_max)
        throw std::out_of_range("build_opuc: moment table covers |k| <= " +
                                std::to_string(m.n_max) + " but n_max = " +
                                std::to_string(n_max) + " is requested");

    OpucSystem sys;
    sys.n_max = n_max;
    sys.moments = m;
    sys.phi.reserve(static_cast<std::size_t>(n_max) + 1);
    sys.phi_star.reserve(static_cast<std::size_t>(n_max) + 1);
    sys.kappa.reserve(static_cast<std::size_t>(n_max) + 1);

    LaurentPoly cur = LaurentPoly::one();
    sys.phi.push_back(cur);
    sys.phi_star.push_back(reversed(cur, 0));
    sys.kappa.push_back(1.0); // <1,1> = c_0 = 1

    const LaurentPoly z1 = LaurentPoly::monomial(1);
    for (int n = 0; n < n_max; ++n) {
        const LaurentPoly& phi_n = sys.phi.back();
        const LaurentPoly& star_n = sys.phi_star.back();

        // alpha_n = <1, z Phi_n> / <1, Phi*_n>; the denominator equals
        // kappa_n^{-2} and is real positive for a nondegenerate measure.
        const cplx num = inner_complex(LaurentPoly::one(), z1 * phi_n, m);
        const cplx den = inner_complex(LaurentPoly::one(), star_n, m);
        const cplx alpha_conj = num / den;
        const cplx alpha_n = std::conj(alpha_conj);
        if (std::abs(alpha_n) >= 1.0 - 1e-12)
            throw std::domain_error(
                "build_opuc: |alpha_" + std::to_string(n) +
                "| >= 1 - 1e-12 (measure degeneracy at this order)");

        LaurentPoly next = z1 * phi_n - alpha_conj * star_n;
        sys.alpha.push_back(alpha_n);
        sys.phi.push_back(next);
        sys.phi_star.push_back(reversed(next, n + 1));
        const double norm2 = inner_complex(next, next, m).real();
        if (norm2 <= 0.0)
            throw std::domain_error("build_opuc: nonpositive norm (degenerate measure)");
        sys.kappa.push_back(1.0 / std::sqrt(norm2));
    }
    return sys;
}

LaurentPoly cmv_chi(const OpucSystem& sys, int n) {
    // chi_{2k-1} = z^{-k+1} phi_{2k-1},  chi_{2k} = z^{-k} phi*_{2k}.
    if (n < 0 || n > sys.n_max) throw std::out_of_range("cmv_chi: index out of range");
    const double k = sys.kappa[static_cast<std::size_t>(n)];
    if (n % 2 == 1) {
        const int j = (n + 1) / 2;
        return k * sys.phi[static_cast<std::size_t>(n)].shifted(-j + 1);
    }
    const int j = n / 2;
    return k * sys.phi_star[static_cast<std::size_t>(n)].shifted(-j);
}

LaurentPoly cmv_x(const OpucSystem& sys, int n) {
    // x_{2k-1} = z^{-k} phi*_{2k-1},  x_{2k} = z^{-k} phi_{2k};
    // equivalently x_n(z) = conj(chi_n(1/conj z)).
    if (n < 0 || n > sys.n_max) throw std::out_of_range("cmv_x: index out of range");
    const double k = sys.kappa[static_cast<std::size_t>(n)];
    if (n % 2 == 1) {
        const int j = (n + 1) / 2;
        return k * sys.phi_star[static_cast<std::size_t>(n)].shifted(-j);
    }
    const int j = n / 2;
    return k * sys.phi[static_cast<std::size_t>(n)].shifted(-j);
}

namespace {

void require_offdiagonal(cplx zeta, cplx z) {
    if (std::abs(std::conj(zeta) * z - cplx(1.0)) < 1e-12)
        throw std::domain_error("cd_kernel: conj(zeta) * z is on the singular diagonal");
}

} // namespace

cplx cd_kernel_opuc(const OpucSystem& sys, int n, cplx zeta, cplx z) {
    require_offdiagonal(zeta, z);
    if (n + 1 > sys.n_max)
        throw std::out_of_range("cd_kernel_opuc: needs system order n+1");
    const cplx s_zeta = sys.orthonormal_star(n + 1, zeta);
    const cplx s_z = sys.orthonormal_star(n + 1, z);
    const cplx p_zeta = sys.orthonormal(n + 1, zeta);
    const cplx p_z = sys.orthonormal(n + 1, z);
    return (std::conj(s_zeta) * s_z - std::conj(p_zeta) * p_z) /
           (cplx(1.0) - std::conj(zeta) * z);
}

cplx cd_kernel_opuc_alt(const OpucSystem& sys, int n, cplx zeta, cplx z) {
    require_offdiagonal(zeta, z);
    const cplx s_zeta = sys.orthonormal_star(n, zeta);
    const cplx s_z = sys.orthonormal_star(n, z);
    const cplx p_zeta = sys.orthonormal(n, zeta);
    const cplx p_z = sys.orthonormal(n, z);
    return (std::conj(s_zeta) * s_z - std::conj(zeta) * z * std::conj(p_zeta) * p_z) /
           (cplx(1.0) - std::conj(zeta) * z);
}

cplx cd_kernel_opuc_sum(const OpucSystem& sys, int n, cplx zeta, cplx z) {
    cplx s = 0.0;
    for (int j = 0; j <= n; ++j)
        s += std::conj(sys.orthonormal(j, zeta)) * sys.orthonormal(j, z);
    return s;
}

} // namespace circpoly
