#include "circpoly/moments.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace circpoly {

namespace {

// One pass of c_k = (1/N) sum_j w(theta_j) e^{-i k theta_j} for k = 0..n_max.
std::vector<cplx> moments_at(const WeightSpec& spec, int n_max, std::size_t nodes) {
    std::vector<cplx> c(static_cast<std::size_t>(n_max) + 1, cplx(0.0));
    for (std::size_t j = 0; j < nodes; ++j) {
        const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
        const double w = eval_weight(spec, th);
        const cplx step = std::polar(1.0, -th);
        cplx phase = 1.0;
        for (int k = 0; k <= n_max; ++k) {
            c[static_cast<std::size_t>(k)] += w * phase;
            phase *= step;
        }
    }
    for (cplx& v : c) v /= static_cast<double>(nodes);
    return c;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

cplx MomentTable::moment(int k) const {
    const int a = std::abs(k);
    if (a > n_max)
        throw std::out_of_range("moment table covers |k| <= " + std::to_string(n_max) +
                                ", requested k = " + std::to_string(k) +
                                "; rebuild with a wider n_max");
    const cplx v = c[static_cast<std::size_t>(a)];
    return k >= 0 ? v : std::conj(v);
}

MomentTable trig_moments(const WeightSpec& spec, int n_max, double tol,
                         std::size_t node_cap) {
    if (n_max < 0) throw std::invalid_argument("trig_moments: n_max must be >= 0");
    const WeightSpec w = spec.validated ? spec : validate_weight(spec, node_cap);

    // Aliasing control: with N nodes the trapezoid rule returns c_k + c_{k-N} +
    // c_{k+N} + ...; start well above the largest requested index.
    std::size_t nodes = 256;
    while (nodes < 4 * (static_cast<std::size_t>(n_max) + 1)) nodes *= 2;

    std::vector<cplx> prev = moments_at(w, n_max, nodes);
    MomentTable m;
    m.n_max = n_max;
    while (true) {
        if (nodes * 2 > node_cap)
            throw std::runtime_error("trig_moments: quadrature failed to converge within the node cap");
        nodes *= 2;
        std::vector<cplx> cur = moments_at(w, n_max, nodes);
        if (max_diff(cur, prev) <= tol) {
            m.c = std::move(cur);
            break;
        }
        prev = std::move(cur);
    }

    if (std::abs(m.c[0] - cplx(1.0)) > 1e-12)
        throw std::logic_error("trig_moments: zeroth moment deviates from 1 after normalization");
    m.c[0] = 1.0; // pin the exact unit mass
    validate_moment_table(m);
    return m;
}

void validate_moment_table(const MomentTable& m) {
    const int n = m.n_max + 1;
    Eigen::MatrixXcd t(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) t(j, k) = m.moment(j - k);
    const Eigen::LLT<Eigen::MatrixXcd> llt(t);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("moment table is not positive definite (degenerate measure)");
}

cplx inner_complex(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m) {
    if (f.is_zero() || g.is_zero()) return 0.0;
    cplx s = 0.0;
    for (int j = f.lo(); j <= f.hi(); ++j) {
        const cplx fj = std::conj(f.coeff(j));
        if (fj == cplx(0.0)) continue;
        for (int k = g.lo(); k <= g.hi(); ++k) {
            const cplx gk = g.coeff(k);
            if (gk == cplx(0.0)) continue;
            s += fj * gk * m.moment(j - k);
        }
    }
    return s;
}

double inner_real(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m) {
    constexpr double kCoeffTol = 1e-11;
    if (!f.real_on_circle(kCoeffTol * std::max(1.0, f.max_abs_coeff())) ||
        !g.real_on_circle(kCoeffTol * std::max(1.0, g.max_abs_coeff())))
        throw std::invalid_argument("inner_real: argument is not real on the circle");
    const cplx v = inner_complex(f, g, m);
    const double scale = std::max({1.0, f.max_abs_coeff(), g.max_abs_coeff()});
    if (std::abs(v.imag()) > 1e-10 * scale * scale)
        throw std::logic_error("inner_real: imaginary residue above tolerance");
    return v.real();
}

double norm_real(const LaurentPoly& f, const MomentTable& m) {
    const double v = inner_real(f, f, m);
    return std::sqrt(std::max(v, 0.0));
}

} // namespace circpoly
