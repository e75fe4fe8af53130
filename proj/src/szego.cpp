#include "circpoly/szego.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace circpoly {

namespace {

const cplx kI(0.0, 1.0);

// Fourier coefficients l_0..l_K of log w by periodic trapezoid quadrature
// with node doubling (tol on the max coefficient change).
std::vector<cplx> log_weight_fourier(const WeightSpec& w, int K, double tol,
                                     std::size_t node_cap) {
    auto pass = [&](std::size_t nodes) {
        std::vector<cplx> ell(static_cast<std::size_t>(K) + 1, cplx(0.0));
        for (std::size_t j = 0; j < nodes; ++j) {
            const double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
            const double lw = std::log(eval_weight(w, th));
            const cplx step = std::polar(1.0, -th);
            cplx phase = 1.0;
            for (int k = 0; k <= K; ++k) {
                ell[static_cast<std::size_t>(k)] += lw * phase;
                phase *= step;
            }
        }
        for (cplx& v : ell) v /= static_cast<double>(nodes);
        return ell;
    };
    std::size_t nodes = 256;
    while (nodes < 8 * (static_cast<std::size_t>(K) + 1)) nodes *= 2;
    std::vector<cplx> prev = pass(nodes);
    while (true) {
        if (nodes * 2 > node_cap)
            throw std::runtime_error("build_szego: quadrature failed to converge");
        nodes *= 2;
        std::vector<cplx> cur = pass(nodes);
        double d = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) d = std::max(d, std::abs(cur[i] - prev[i]));
        if (d <= tol) return cur;
        prev = std::move(cur);
    }
}

} // namespace

cplx SzegoFunction::ell_at(int k) const {
    const int a = std::abs(k);
    if (a > trunc_order) return 0.0;
    const cplx v = ell[static_cast<std::size_t>(a)];
    return k >= 0 ? v : std::conj(v);
}

SzegoFunction build_szego(const WeightSpec& spec, double tail_tol, std::size_t node_cap) {
    SzegoFunction sf;
    sf.weight = spec.validated ? spec : validate_weight(spec, node_cap);

    int K = 16;
    constexpr int kMaxOrder = 4096;
    while (true) {
        std::vector<cplx> ell = log_weight_fourier(sf.weight, K, 1e-15, node_cap);
        // Judge the tail by the largest of the last few retained coefficients:
        // analytic log w decays geometrically, so this certifies the cutoff.
        double tail = 0.0;
        for (int k = std::max(1, K - 3); k <= K; ++k)
            tail = std::max(tail, std::abs(ell[static_cast<std::size_t>(k)]));
        if (tail < tail_tol) {
            sf.trunc_order = K;
            sf.tail_bound = tail;
            sf.ell = std::move(ell);
            return sf;
        }
        if (K >= kMaxOrder)
            throw std::runtime_error("build_szego: log-weight Fourier tail does not "
                                     "reach the tolerance within the order cap");
        K *= 2;
    }
}

cplx szego_d(const SzegoFunction& sf, cplx z, Region region) {
    const double r = std::abs(z);
    switch (region) {
        case Region::interior: {
            if (r >= 1.0 - 1e-12)
                throw std::domain_error("szego_d: interior region requires |z| < 1");
            cplx s = 0.0;
            for (int k = sf.trunc_order; k >= 0; --k) s = s * z + sf.ell_at(k);
            return std::exp(s);
        }
        case Region::exterior: {
            if (r <= 1.0 + 1e-12)
                throw std::domain_error("szego_d: exterior region requires |z| > 1");
            const cplx w = cplx(1.0) / z;
            cplx s = 0.0;
            for (int k = sf.trunc_order; k >= 1; --k) s = s * w + sf.ell_at(-k);
            return std::exp(s * w);
        }
        case Region::boundary: {
            if (std::abs(r - 1.0) > 1e-12)
                throw std::domain_error("szego_d: boundary region requires |z| = 1");
            cplx s = 0.0;
            const cplx w = cplx(1.0) / z;
            for (int k = sf.trunc_order; k >= 1; --k) s = s * w + sf.ell_at(-k);
            return std::exp(s * w);
        }
    }
    throw std::logic_error("szego_d: unhandled region");
}

cplx szego_d_boundary_interior(const SzegoFunction& sf, cplx t) {
    if (std::abs(std::abs(t) - 1.0) > 1e-12)
        throw std::domain_error("szego_d_boundary_interior: requires |t| = 1");
    cplx s = 0.0;
    for (int k = sf.trunc_order; k >= 0; --k) s = s * t + sf.ell_at(k);
    return std::exp(s);
}

MomentTable wide_moments(const WeightSpec& spec, int min_n, double tail_tol) {
    int n = std::max(min_n, 16);
    constexpr int kCap = 1024;
    while (true) {
        MomentTable m = trig_moments(spec, n, 1e-14);
        double tail = 0.0;
        for (int k = std::max(1, n - 3); k <= n; ++k)
            tail = std::max(tail, std::abs(m.moment(k)));
        if (tail < tail_tol) return m;
        if (n >= kCap)
            throw std::runtime_error("wide_moments: weight Fourier tail does not decay "
                                     "below the tolerance within the order cap");
        n *= 2;
    }
}

cplx density_fourier(const LaurentPoly& p, const MomentTable& wide, int k) {
    // Fourier coefficient of p(t) w(t): f_k = sum_j p_j c_{k-j}; moments
    // beyond the (wide) table are below its certified tail and count as 0.
    cplx s = 0.0;
    for (int j = p.lo(); j <= p.hi(); ++j) {
        const int off = k - j;
        if (!wide.covers(off)) continue;
        s += p.coeff(j) * wide.moment(off);
    }
    return s;
}

cplx cauchy_transform(const LaurentPoly& p, const MomentTable& wide, cplx z) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= 1e-12)
        throw std::domain_error("cauchy_transform: z is on the circle; use the "
                                "boundary Plemelj path");
    if (r < 1.0) {
        const int k_hi = p.hi() + wide.n_max;
        cplx s = 0.0;
        for (int k = k_hi; k >= 0; --k) s = s * z + density_fourier(p, wide, k);
        return s;
    }
    const int k_lo = p.lo() - wide.n_max;
    const cplx w = cplx(1.0) / z;
    cplx s = 0.0;
    for (int k = k_lo; k <= -1; ++k) s = s * w + density_fourier(p, wide, k);
    return -s * w;
}

cplx cauchy_transform_boundary(const LaurentPoly& p, const MomentTable& wide, cplx t,
                               bool plus) {
    if (std::abs(std::abs(t) - 1.0) > 1e-12)
        throw std::domain_error("cauchy_transform_boundary: requires |t| = 1");
    if (plus) {
        const int k_hi = p.hi() + wide.n_max;
        cplx s = 0.0;
        for (int k = k_hi; k >= 0; --k) s = s * t + density_fourier(p, wide, k);
        return s;
    }
    const int k_lo = p.lo() - wide.n_max;
    const cplx w = cplx(1.0) / t;
    cplx s = 0.0;
    for (int k = k_lo; k <= -1; ++k) s = s * w + density_fourier(p, wide, k);
    return -s * w;
}

namespace {

// Bridge combinations served as Laurent polynomials (levels >= 1):
//   comb1_n = a_n sigma_n + (beta_n + i) b_n pi_n        ( = z^{1-n} Phi_{2n-1} )
//   comb2_n = (1/2)[a_n^{-1}(1+beta_n i) sigma_n - i b_n^{-1} pi_n ]
//                                                        ( = z^{-n} kap^2 Phi*_{2n} )
LaurentPoly otp_comb1(const OtpSystem& otp, int n) {
    const double a = otp.a[static_cast<std::size_t>(n)];
    const double b = otp.b[static_cast<std::size_t>(n)];
    const double beta = otp.beta[static_cast<std::size_t>(n)];
    return cplx(a) * otp.sigma(n) + (beta + kI) * b * otp.pi(n);
}

LaurentPoly otp_comb2(const OtpSystem& otp, int n) {
    if (n == 0) return LaurentPoly::one(); // kap_0^2 Phi*_0 = 1 (circle side)
    const double a = otp.a[static_cast<std::size_t>(n)];
    const double b = otp.b[static_cast<std::size_t>(n)];
    const double beta = otp.beta[static_cast<std::size_t>(n)];
    return 0.5 * (1.0 + beta * kI) / a * otp.sigma(n) - 0.5 * kI / b * otp.pi(n);
}

struct YDensities {
    LaurentPoly col1; // t^{-2n+1} Phi_{2n-1} w   (polynomial factor; weight implied)
    LaurentPoly col2; // -kap_{2n-2}^2 t^{-2n+1} Phi*_{2n-2} w (ditto)
    LaurentPoly row1_col1; // z Phi_{2n-1}
    LaurentPoly row1_col2; // -kap_{2n-2}^2 z Phi*_{2n-2}
};

YDensities y_parts(YForm form, const OtpSystem& otp, const OpucSystem& opuc, int n) {
    if (n < 1) throw std::out_of_range("assemble_y: n must be >= 1");
    YDensities d;
    if (form == YForm::opuc) {
        if (2 * n - 1 > opuc.n_max)
            throw std::out_of_range("assemble_y: circle system order 2n-1 required");
        const double kap = opuc.kappa[static_cast<std::size_t>(2 * n - 2)];
        const LaurentPoly& phi = opuc.phi[static_cast<std::size_t>(2 * n - 1)];
        const LaurentPoly& star = opuc.phi_star[static_cast<std::size_t>(2 * n - 2)];
        d.row1_col1 = phi.shifted(1);
        d.row1_col2 = cplx(-kap * kap) * star.shifted(1);
        d.col1 = phi.shifted(-2 * n + 1);
        d.col2 = cplx(-kap * kap) * star.shifted(-2 * n + 1);
        return d;
    }
    if (n > otp.n_max)
        throw std::out_of_range("assemble_y: trigonometric system order n required");
    const LaurentPoly c1 = otp_comb1(otp, n);       // z^{1-n} Phi_{2n-1}
    const LaurentPoly c2 = otp_comb2(otp, n - 1);   // z^{-(n-1)} kap^2 Phi*_{2n-2}
    d.row1_col1 = c1.shifted(n);
    d.row1_col2 = cplx(-1.0) * c2.shifted(n);
    d.col1 = c1.shifted(-n);
    d.col2 = cplx(-1.0) * c2.shifted(-n); // t^{-2n} * row1_col2
    return d;
}

} // namespace

RhpMatrix assemble_y(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                     const MomentTable& wide, int n, cplx z) {
    const YDensities d = y_parts(form, otp, opuc, n);
    RhpMatrix y;
    y.n = n;
    y.side = std::abs(z) < 1.0 ? YSide::interior : YSide::exterior;
    y.y11 = d.row1_col1.eval(z);
    y.y12 = d.row1_col2.eval(z);
    y.y21 = cauchy_transform(d.col1, wide, z);
    y.y22 = cauchy_transform(d.col2, wide, z);
    return y;
}

RhpMatrix assemble_y_boundary(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                              const MomentTable& wide, int n, cplx t, bool plus) {
    const YDensities d = y_parts(form, otp, opuc, n);
    RhpMatrix y;
    y.n = n;
    y.side = plus ? YSide::boundary_plus : YSide::boundary_minus;
    y.y11 = d.row1_col1.eval(t);
    y.y12 = d.row1_col2.eval(t);
    y.y21 = cauchy_transform_boundary(d.col1, wide, t, plus);
    y.y22 = cauchy_transform_boundary(d.col2, wide, t, plus);
    return y;
}

double verify_y_jump(const OtpSystem& otp, const OpucSystem& opuc,
                     const MomentTable& wide, const WeightSpec& weight, int n,
                     int samples) {
    double worst = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double th = 2.0 * kPi * j / samples;
        const cplx t = std::polar(1.0, th);
        const RhpMatrix yp = assemble_y_boundary(YForm::opuc, otp, opuc, wide, n, t, true);
        const RhpMatrix ym = assemble_y_boundary(YForm::opuc, otp, opuc, wide, n, t, false);
        const cplx g21 = std::pow(t, -2 * n) * eval_weight(weight, th);
        worst = std::max({worst, std::abs(yp.y11 - ym.y11), std::abs(yp.y12 - ym.y12),
                          std::abs(yp.y21 - (g21 * ym.y11 + ym.y21)),
                          std::abs(yp.y22 - (g21 * ym.y12 + ym.y22))});
    }
    return worst;
}

RhpMatrix y_principal_part(YForm form, const OtpSystem& otp, const OpucSystem& opuc,
                           const MomentTable& wide, int n, double radius, int samples) {
    const YDensities d = y_parts(form, otp, opuc, n);
    RhpMatrix mean;
    mean.n = n;
    mean.side = radius < 1.0 ? YSide::interior : YSide::exterior;
    // First row: plain Laurent polynomials, so the sampled circle mean is
    // stable at any radius.
    for (int j = 0; j < samples; ++j) {
        const cplx z = std::polar(radius, 2.0 * kPi * j / samples);
        const cplx lead = std::pow(z, -2 * n);
        mean.y11 += lead * d.row1_col1.eval(z);
        mean.y12 += lead * d.row1_col2.eval(z);
    }
    const double inv = 1.0 / samples;
    mean.y11 *= inv;
    mean.y12 *= inv;
    // Second row: the mean of z^{2n-1} C[f](z) over any exterior circle is the
    // coefficient of z^{1-2n} in the transform, i.e. -f_{1-2n}.  Sampling would
    // multiply the (analytically zero) coefficients f_{-1}..f_{2-2n} by powers
    // of the radius up to R^{2n-2} and recover their cancellation only in exact
    // arithmetic, so the mean is read off the Fourier data instead.
    mean.y21 = -density_fourier(d.col1, wide, 1 - 2 * n);
    mean.y22 = -density_fourier(d.col2, wide, 1 - 2 * n);
    return mean;
}

RateReport asymptotic_residuals(const OtpSystem& otp, const SzegoFunction& sf,
                                AsympKind kind, const std::vector<cplx>& points,
                                int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo || n_hi > otp.n_max)
        throw std::out_of_range("asymptotic_residuals: bad level range");
    RateReport rep;
    double dist = 1.0 / 3.0;
    for (const cplx& z : points) dist = std::min(dist, std::abs(std::abs(z) - 1.0));
    const double eps = 0.9 * dist;
    rep.c2_reference = std::log1p(1.5 * eps);

    for (int n = n_lo; n <= n_hi; ++n) {
        double worst = 0.0;
        for (const cplx& z : points) {
            cplx value;
            switch (kind) {
                case AsympKind::exterior:
                    value = std::pow(z, -n) * szego_d(sf, z, Region::exterior) *
                            otp_comb1(otp, n).eval(z);
                    break;
                case AsympKind::interior:
                    value = std::pow(z, n) * szego_d(sf, z, Region::interior) *
                            otp_comb2(otp, n).eval(z);
                    break;
                case AsympKind::boundary:
                    value = std::pow(z, -n) * szego_d(sf, z, Region::boundary) *
                            otp_comb1(otp, n).eval(z);
                    break;
            }
            worst = std::max(worst, std::abs(value - cplx(1.0)));
        }
        rep.n_values.push_back(n);
        rep.residuals.push_back(worst);
    }

    // Least-squares slope of log residual vs n over the positive entries.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int cnt = 0;
    for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
        if (rep.residuals[i] <= 0.0) continue;
        const double x = rep.n_values[i];
        const double y = std::log(rep.residuals[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2 && cnt * sxx - sx * sx > 0.0)
        rep.fitted_rate = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.residuals.size(); ++i)
        if (!(rep.residuals[i] < rep.residuals[i - 1])) rep.monotone = false;
    return rep;
}

double opuc_szego_residual(const OpucSystem& opuc, const SzegoFunction& sf, int n, cplx z) {
    if (2 * n - 1 > opuc.n_max || n < 1)
        throw std::out_of_range("opuc_szego_residual: circle system order 2n-1 required");
    const double r = std::abs(z);
    const Region region = std::abs(r - 1.0) <= 1e-12
                              ? Region::boundary
                              : (r < 1.0 ? Region::interior : Region::exterior);
    const cplx value = std::pow(z, 1 - 2 * n) * szego_d(sf, z, region) *
                       opuc.phi[static_cast<std::size_t>(2 * n - 1)].eval(z);
    return std::abs(value - cplx(1.0));
}

} // namespace circpoly
