#include "circpoly/otp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace circpoly {

LaurentPoly basis_element(OtpFamily family, int n) {
    if (n < 0) throw std::invalid_argument("basis_element: index must be >= 0");
    if (n == 0) return LaurentPoly::one();
    const int k = (n + 1) / 2;
    // (z^k + z^-k)/2 = cos k th,  (z^k - z^-k)/(2i) = sin k th.
    LaurentPoly cos_k, sin_k;
    cos_k.set_coeff(k, 0.5);
    cos_k.set_coeff(-k, 0.5);
    sin_k.set_coeff(k, cplx(0.0, -0.5));
    sin_k.set_coeff(-k, cplx(0.0, 0.5));
    const bool odd_position = (n % 2 == 1);
    if (family == OtpFamily::first) return odd_position ? sin_k : cos_k;
    return odd_position ? cos_k : sin_k;
}

LaurentPoly OtpSystem::sigma(int k) const {
    if (k == 0) return LaurentPoly::one();
    return ortho.at(static_cast<std::size_t>(2 * k));
}

LaurentPoly OtpSystem::pi(int k) const {
    if (k == 0) return LaurentPoly::zero();
    return ortho.at(static_cast<std::size_t>(2 * k - 1));
}

OtpSystem gram_schmidt(const MomentTable& m, OtpFamily family, int n_max) {
    if (n_max < 0) throw std::invalid_argument("gram_schmidt: n_max must be >= 0");
    if (m.n_max < 2 * n_max)
        throw std::out_of_range("gram_schmidt: moment table covers |k| <= " +
                                std::to_string(m.n_max) + " but order " +
                                std::to_string(n_max) + " needs |k| <= " +
                                std::to_string(2 * n_max));

    OtpSystem sys;
    sys.family = family;
    sys.n_max = n_max;
    sys.moments = m;
    sys.a.assign(static_cast<std::size_t>(n_max) + 1, 1.0);
    sys.b.assign(static_cast<std::size_t>(n_max) + 1, 1.0);
    sys.beta.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

    for (int n = 0; n <= 2 * n_max; ++n) {
        LaurentPoly v = basis_element(family, n);
        // Modified Gram-Schmidt, then one reorthogonalization pass: the second
        // pass removes the O(eps * condition) leakage of the first.
        for (int pass = 0; pass < 2; ++pass)
            for (const LaurentPoly& e : sys.ortho) v -= inner_real(v, e, m) * e;
        const double nrm = norm_real(v, m);
        if (nrm < 1e-12)
            throw std::domain_error("gram_schmidt: residual norm below 1e-12 "
                                    "(numerically degenerate measure) at element " +
                                    std::to_string(n));
        const int level = (n + 1) / 2;
        if (n >= 1) {
            if (n % 2 == 1)
                sys.b[static_cast<std::size_t>(level)] = nrm;
            else
                sys.a[static_cast<std::size_t>(level)] = nrm;
        }
        sys.ortho.push_back((1.0 / nrm) * v);
    }

    // beta_k = <even-position basis element, pi_k> / b_k, from the defining
    // projection (computed after the fact so both passes are reflected).
    for (int k = 1; k <= n_max; ++k)
        sys.beta[static_cast<std::size_t>(k)] =
            inner_real(basis_element(family, 2 * k),
                       sys.ortho[static_cast<std::size_t>(2 * k - 1)], m) /
            sys.b[static_cast<std::size_t>(k)];
    return sys;
}

cplx eval_otp(const OtpSystem& sys, OtpKind which, int k, cplx z) {
    const LaurentPoly p = which == OtpKind::sigma ? sys.sigma(k) : sys.pi(k);
    const cplx v = p.eval(z);
    if (std::abs(std::abs(z) - 1.0) <= 1e-12) {
        if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v)) * (1 + 2 * k))
            throw std::logic_error("eval_otp: value on the circle is not real");
    }
    return v;
}

double structure_residual(const OtpSystem& sys, int k) {
    if (k < 1 || k > sys.n_max)
        throw std::out_of_range("structure_residual: level out of range");
    const LaurentPoly t = sys.a[static_cast<std::size_t>(k)] * sys.sigma(k) -
                          basis_element(sys.family, 2 * k) +
                          sys.beta[static_cast<std::size_t>(k)] *
                              sys.b[static_cast<std::size_t>(k)] * sys.pi(k);
    return std::max(std::abs(t.coeff(k)), std::abs(t.coeff(-k)));
}

} // namespace circpoly
