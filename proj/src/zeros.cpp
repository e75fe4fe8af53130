#include "circpoly/zeros.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

namespace circpoly {

namespace {

const cplx kI(0.0, 1.0);

double wrap_angle(double th) {
    th = std::fmod(th, 2.0 * kPi);
    if (th < 0.0) th += 2.0 * kPi;
    // A tiny negative input can round up to exactly 2*pi; keep [0, 2*pi).
    if (th >= 2.0 * kPi) th -= 2.0 * kPi;
    return th;
}

double circular_distance(double x, double y) {
    const double d = std::abs(wrap_angle(x) - wrap_angle(y));
    return std::min(d, 2.0 * kPi - d);
}

// Worst distance from the half-turn image of the set to the set itself.
double pairing_defect_of(const std::vector<double>& angles) {
    double worst = 0.0;
    for (double th : angles) {
        double best = 2.0 * kPi;
        for (double other : angles) best = std::min(best, circular_distance(th + kPi, other));
        worst = std::max(worst, best);
    }
    return worst;
}

// Uniform double in [0,1) from the top 53 bits of the engine output, so the
// stream is identical on every platform (distributions are not portable).
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick_index(std::mt19937_64& rng, std::size_t size) {
    const auto idx = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(size));
    return std::min(idx, size - 1);
}

} // namespace

ZeroSet trig_zeros(const LaurentPoly& p) {
    const int n = p.hi();
    if (n < 1) throw std::invalid_argument("trig_zeros: order must be >= 1");
    if (!p.real_on_circle(1e-9))
        throw std::invalid_argument("trig_zeros: polynomial is not real on the circle");
    const double scale = p.max_abs_coeff();
    if (!(std::abs(p.coeff(n)) > 1e-12 * scale) || !(std::abs(p.coeff(-n)) > 1e-12 * scale))
        throw std::domain_error("trig_zeros: leading harmonic below tolerance");

    // Companion matrix of the monic normalization of q(z) = z^n p(z).
    const int deg = 2 * n;
    const cplx lead = p.coeff(n);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (int r = 1; r < deg; ++r) comp(r, r - 1) = 1.0;
    for (int r = 0; r < deg; ++r) comp(r, deg - 1) = -p.coeff(r - n) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("trig_zeros: eigenvalue iteration failed");

    ZeroSet zs;
    zs.n = n;
    std::vector<std::pair<double, double>> found; // (angle, residual)
    for (int r = 0; r < deg; ++r) {
        const cplx root = es.eigenvalues()(r);
        zs.max_off_circle = std::max(zs.max_off_circle, std::abs(std::abs(root) - 1.0));
        double th = wrap_angle(std::arg(root));
        // One Newton step on the (real) circle restriction.
        const cplx t = std::polar(1.0, th);
        const double g = p.eval(t).real();
        const double gp = p.eval_dtheta(t).real();
        if (std::abs(gp) > 1e-8 * scale) th = wrap_angle(th - g / gp);
        found.emplace_back(th, std::abs(p.eval(std::polar(1.0, th))));
    }
    std::sort(found.begin(), found.end());
    for (const auto& [th, res] : found) {
        zs.angles.push_back(th);
        zs.residuals.push_back(res);
    }
    zs.structure_violation = zs.max_off_circle > 1e-6;
    return zs;
}

ZeroDiagnostics zero_diagnostics(const OtpSystem& otp, int n) {
    if (n < 1 || n > otp.n_max)
        throw std::out_of_range("zero_diagnostics: level out of range");
    ZeroDiagnostics d;
    d.n = n;
    const LaurentPoly sig = otp.sigma(n);
    const LaurentPoly pi = otp.pi(n);
    d.sigma_zeros = trig_zeros(sig);
    d.pi_zeros = trig_zeros(pi);

    double sep = std::numeric_limits<double>::infinity();
    for (double th : d.sigma_zeros.angles)
        sep = std::min(sep, std::abs(pi.eval(std::polar(1.0, th))));
    for (double th : d.pi_zeros.angles)
        sep = std::min(sep, std::abs(sig.eval(std::polar(1.0, th))));
    d.separation = sep;

    d.pairing_defect_sigma = pairing_defect_of(d.sigma_zeros.angles);
    d.pairing_defect_pi = pairing_defect_of(d.pi_zeros.angles);
    d.pairing_defect = std::max(d.pairing_defect_sigma, d.pairing_defect_pi);
    return d;
}

ZeroIdentityReport zero_identities(const OtpSystem& otp, const OpucSystem& opuc, int n,
                                   std::uint64_t seed, int det_samples) {
    if (n < 1 || n > otp.n_max)
        throw std::out_of_range("zero_identities: level out of range");
    if (2 * n > opuc.n_max)
        throw std::out_of_range("zero_identities: circle system order 2n required");

    const LaurentPoly sig = otp.sigma(n);
    const LaurentPoly pi = otp.pi(n);
    const LaurentPoly& phi_odd = opuc.phi[static_cast<std::size_t>(2 * n - 1)];
    const LaurentPoly& star = opuc.phi_star[static_cast<std::size_t>(2 * n)];

    const double a = otp.a[static_cast<std::size_t>(n)];
    const double b = otp.b[static_cast<std::size_t>(n)];
    const double beta = otp.beta[static_cast<std::size_t>(n)];
    const double kap = opuc.kappa[static_cast<std::size_t>(2 * n)];
    const double kap2 = kap * kap;
    const cplx c_sigma_odd = cplx(1.0) / a;
    const cplx c_pi_odd = cplx(1.0) / ((beta + kI) * b);
    const cplx c_sigma_star = 2.0 * kap2 * a / (1.0 + beta * kI);
    const cplx c_pi_star = 2.0 * kap2 * b * kI;

    const ZeroSet pz = trig_zeros(pi);   // evaluation angles for sigma ratios
    const ZeroSet sz = trig_zeros(sig);  // evaluation angles for pi ratios

    auto guarded = [](cplx den, const char* what) {
        if (std::abs(den) < 1e-12)
            throw std::domain_error(std::string("zero_identities: ill-conditioned "
                                                "denominator in ") + what);
        return den;
    };

    ZeroIdentityReport rep;
    rep.n = n;

    std::vector<cplx> first_ratios;
    for (double th : pz.angles) {
        const cplx t = std::polar(1.0, th);
        const cplx sval = sig.eval(t);
        const cplx r_odd = std::polar(1.0, (n - 1) * th) * sval /
                           guarded(phi_odd.eval(t), "odd-degree ratio");
        const cplx r_star = std::polar(1.0, n * th) * sval /
                            guarded(star.eval(t), "reversed ratio");
        first_ratios.push_back(r_odd);
        rep.sigma_odd_ratio = std::max(rep.sigma_odd_ratio, std::abs(r_odd - c_sigma_odd));
        rep.sigma_star_ratio = std::max(rep.sigma_star_ratio, std::abs(r_star - c_sigma_star));
    }
    for (const cplx& r : first_ratios)
        rep.ratio_spread = std::max(rep.ratio_spread, std::abs(r - first_ratios.front()));

    for (double th : sz.angles) {
        const cplx t = std::polar(1.0, th);
        const cplx pval = pi.eval(t);
        const cplx starval = guarded(star.eval(t), "reversed ratio");
        const cplx r_odd = std::polar(1.0, (n - 1) * th) * pval /
                           guarded(phi_odd.eval(t), "odd-degree ratio");
        const cplx r_star = std::polar(1.0, n * th) * pval / starval;
        rep.pi_odd_ratio = std::max(rep.pi_odd_ratio, std::abs(r_odd - c_pi_odd));
        rep.pi_star_ratio = std::max(rep.pi_star_ratio, std::abs(r_star - c_pi_star));
        rep.family_residual = std::max(
            rep.family_residual,
            std::abs(std::polar(1.0, n * th) * pval - c_pi_star * starval));
    }

    // Determinant of the four ratios over sampled zero tuples.
    std::mt19937_64 rng(seed);
    const cplx target = -2.0 * a * b * kI;
    for (int s = 0; s < det_samples; ++s) {
        const double thp1 = pz.angles[pick_index(rng, pz.angles.size())];
        const double ths1 = sz.angles[pick_index(rng, sz.angles.size())];
        const double thp2 = pz.angles[pick_index(rng, pz.angles.size())];
        const double ths2 = sz.angles[pick_index(rng, sz.angles.size())];
        const cplx tp1 = std::polar(1.0, thp1), ts1 = std::polar(1.0, ths1);
        const cplx tp2 = std::polar(1.0, thp2), ts2 = std::polar(1.0, ths2);
        const cplx m11 = phi_odd.eval(tp1) /
                         guarded(std::polar(1.0, (n - 1) * thp1) * sig.eval(tp1), "determinant");
        const cplx m12 = phi_odd.eval(ts1) /
                         guarded(std::polar(1.0, (n - 1) * ths1) * pi.eval(ts1), "determinant");
        const cplx m21 = star.eval(tp2) /
                         guarded(std::polar(1.0, n * thp2) * sig.eval(tp2), "determinant");
        const cplx m22 = star.eval(ts2) /
                         guarded(std::polar(1.0, n * ths2) * pi.eval(ts2), "determinant");
        rep.det_residual = std::max(rep.det_residual,
                                    std::abs(m11 * m22 - m12 * m21 - target));
    }

    // Antipodal variants presume zeros come in half-turn pairs; check the
    // pairing first and skip (with a note) when it fails to hold.
    const double defect = std::max(pairing_defect_of(pz.angles), pairing_defect_of(sz.angles));
    if (defect < 1e-8) {
        rep.antipodal_checked = true;
        const double par_odd = (n - 1) % 2 == 0 ? 1.0 : -1.0;
        const double par_star = n % 2 == 0 ? 1.0 : -1.0;
        for (double th : pz.angles) {
            if (th >= kPi) continue;
            const cplx mt = -std::polar(1.0, th);
            const cplx r_odd = par_odd * std::polar(1.0, (n - 1) * th) * sig.eval(mt) /
                               guarded(phi_odd.eval(mt), "antipodal odd-degree ratio");
            const cplx r_star = par_star * std::polar(1.0, n * th) * sig.eval(mt) /
                                guarded(star.eval(mt), "antipodal reversed ratio");
            rep.antipodal_residual = std::max({rep.antipodal_residual,
                                               std::abs(r_odd - c_sigma_odd),
                                               std::abs(r_star - c_sigma_star)});
        }
        for (double th : sz.angles) {
            if (th >= kPi) continue;
            const cplx mt = -std::polar(1.0, th);
            const cplx r_odd = par_odd * std::polar(1.0, (n - 1) * th) * pi.eval(mt) /
                               guarded(phi_odd.eval(mt), "antipodal odd-degree ratio");
            const cplx r_star = par_star * std::polar(1.0, n * th) * pi.eval(mt) /
                                guarded(star.eval(mt), "antipodal reversed ratio");
            rep.antipodal_residual = std::max({rep.antipodal_residual,
                                               std::abs(r_odd - c_pi_odd),
                                               std::abs(r_star - c_pi_star)});
        }
    } else {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "antipodal pairing defect %.3e; half-turn ratio checks skipped",
                      defect);
        rep.note = buf;
    }
    return rep;
}

} // namespace circpoly
