#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "circpoly/moments.hpp"
#include "circpoly/opuc.hpp"
#include "circpoly/otp.hpp"
#include "circpoly/weights.hpp"
#include "circpoly/zeros.hpp"

using namespace circpoly;

namespace {

struct Pair {
    OtpSystem otp;
    OpucSystem opuc;
};

Pair build_pair(const char* preset, int levels) {
    const WeightSpec w = validate_weight(preset_weight(preset));
    const MomentTable m = trig_moments(w, 2 * levels);
    return {gram_schmidt(m, OtpFamily::first, levels), build_opuc(m, 2 * levels)};
}

// Worst circular distance from each expected angle to the computed set; a
// zero at theta = 0 may legitimately be reported as 2pi - eps, so the golden
// comparisons are circular rather than index-aligned.
double circ_mismatch(const std::vector<double>& expected, const std::vector<double>& got) {
    double worst = 0.0;
    for (double e : expected) {
        double best = 2.0 * kPi;
        for (double g : got) {
            const double d = std::abs(std::fmod(std::abs(e - g), 2.0 * kPi));
            best = std::min(best, std::min(d, 2.0 * kPi - d));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

// Sign-change bisection oracle on a dense grid (independent of the companion
// matrix path).
std::vector<double> grid_zeros(const LaurentPoly& p, int grid = 100000) {
    std::vector<double> out;
    auto f = [&](double th) { return p.eval(std::polar(1.0, th)).real(); };
    double prev = f(0.0);
    for (int j = 1; j <= grid; ++j) {
        const double th = 2.0 * kPi * j / grid;
        const double cur = f(th);
        if (prev == 0.0) out.push_back(2.0 * kPi * (j - 1) / grid);
        else if (prev * cur < 0.0) {
            double lo = 2.0 * kPi * (j - 1) / grid, hi = th;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (f(lo) * f(mid) <= 0.0) hi = mid;
                else lo = mid;
            }
            out.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return out;
}

} // namespace

TEST_CASE("flat weight: zeros at the classical equispaced angles") {
    const Pair p = build_pair("lebesgue", 4);
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const ZeroDiagnostics d = zero_diagnostics(p.otp, n);
        REQUIRE(int(d.sigma_zeros.angles.size()) == 2 * n);
        REQUIRE(int(d.pi_zeros.angles.size()) == 2 * n);
        // sigma_n ~ cos(n th): zeros (2j+1) pi / (2n); pi_n ~ sin(n th): j pi / n.
        std::vector<double> sigma_expected, pi_expected;
        for (int j = 0; j < 2 * n; ++j) {
            sigma_expected.push_back((2 * j + 1) * kPi / (2 * n));
            pi_expected.push_back(j * kPi / n);
            CHECK(d.sigma_zeros.residuals[j] < 1e-12);
            CHECK(d.pi_zeros.residuals[j] < 1e-12);
        }
        CHECK(circ_mismatch(sigma_expected, d.sigma_zeros.angles) < 1e-10);
        CHECK(circ_mismatch(pi_expected, d.pi_zeros.angles) < 1e-10);
        CHECK(!d.sigma_zeros.structure_violation);
        CHECK(!d.pi_zeros.structure_violation);
        CHECK(d.pairing_defect < 1e-12);
        // At a zero of sin(n th), |sqrt(2) cos(n th)| = sqrt(2) and vice versa.
        CHECK(d.separation == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    }
}

TEST_CASE("flat weight: ratio identities with exact constants") {
    const Pair p = build_pair("lebesgue", 4);
    for (int n = 1; n <= 4; ++n) {
        const ZeroIdentityReport r = zero_identities(p.otp, p.opuc, n);
        CHECK(r.sigma_odd_ratio < 1e-10);
        CHECK(r.pi_odd_ratio < 1e-10);
        CHECK(r.sigma_star_ratio < 1e-10);
        CHECK(r.pi_star_ratio < 1e-10);
        CHECK(r.ratio_spread < 1e-10);
        CHECK(r.det_residual < 1e-10);
        CHECK(r.family_residual < 1e-10);
        CHECK(r.antipodal_checked);
        CHECK(r.antipodal_residual < 1e-10);
    }
}

TEST_CASE("companion-matrix zeros match a dense bisection oracle") {
    const Pair p = build_pair("expcos", 3);
    const ZeroSet zs = trig_zeros(p.otp.sigma(3));
    const std::vector<double> oracle = grid_zeros(p.otp.sigma(3));
    REQUIRE(zs.angles.size() == 6);
    REQUIRE(oracle.size() == 6);
    CHECK(circ_mismatch(oracle, zs.angles) < 1e-10);
    for (int j = 0; j < 6; ++j) CHECK(zs.residuals[j] < 1e-10);
}

TEST_CASE("zero counts, circle placement, and simplicity on every test weight") {
    for (const char* name : {"lebesgue", "cosine", "asymmetric", "expcos", "bernstein"}) {
        CAPTURE(name);
        const Pair p = build_pair(name, 6);
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(n);
            const ZeroDiagnostics d = zero_diagnostics(p.otp, n);
            for (const ZeroSet* zs : {&d.sigma_zeros, &d.pi_zeros}) {
                REQUIRE(int(zs->angles.size()) == 2 * n);
                CHECK(zs->max_off_circle < 1e-8);
                CHECK(!zs->structure_violation);
                CHECK(std::is_sorted(zs->angles.begin(), zs->angles.end()));
                CHECK(zs->angles.front() >= 0.0);
                CHECK(zs->angles.back() < 2.0 * kPi);
                double gap = 2.0 * kPi;
                for (int j = 0; j < 2 * n; ++j) {
                    const double next =
                        (j + 1 < 2 * n) ? zs->angles[j + 1]
                                        : zs->angles[0] + 2.0 * kPi;
                    gap = std::min(gap, next - zs->angles[j]);
                }
                CHECK(gap > 1e-6);
            }
            CHECK(d.separation > 1e-6);
        }
    }
}

TEST_CASE("ratio identities hold on every test weight") {
    for (const char* name : {"lebesgue", "cosine", "asymmetric", "expcos", "bernstein"}) {
        CAPTURE(name);
        const Pair p = build_pair(name, 4);
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(n);
            const ZeroIdentityReport r = zero_identities(p.otp, p.opuc, n);
            CHECK(r.sigma_odd_ratio < 1e-8);
            CHECK(r.pi_odd_ratio < 1e-8);
            CHECK(r.sigma_star_ratio < 1e-8);
            CHECK(r.pi_star_ratio < 1e-8);
            CHECK(r.ratio_spread < 1e-8);
            CHECK(r.det_residual < 1e-8);
            CHECK(r.family_residual < 1e-8);
        }
    }
}

TEST_CASE("half-turn checks are skipped when the zero set is not paired") {
    const Pair p = build_pair("asymmetric", 3);
    const ZeroDiagnostics d = zero_diagnostics(p.otp, 1);
    CHECK(d.pairing_defect > 0.1);
    const ZeroIdentityReport r = zero_identities(p.otp, p.opuc, 1);
    CHECK(!r.antipodal_checked);
    CHECK(!r.note.empty());

    // The half-turn checks must track the measured pairing defect: run and
    // pass when the zero set is paired, skip with a note when it is not.
    const Pair q = build_pair("expcos", 3);
    for (int n = 1; n <= 3; ++n) {
        const ZeroDiagnostics dq = zero_diagnostics(q.otp, n);
        const ZeroIdentityReport s = zero_identities(q.otp, q.opuc, n);
        CHECK(s.antipodal_checked == (dq.pairing_defect < 1e-8));
        if (s.antipodal_checked)
            CHECK(s.antipodal_residual < 1e-8);
        else
            CHECK(!s.note.empty());
    }
}

TEST_CASE("root finder input validation") {
    LaurentPoly not_real;
    not_real.set_coeff(1, cplx(1.0, 0.0)); // z alone is not real on the circle
    CHECK_THROWS_AS((void)trig_zeros(not_real), std::invalid_argument);

    LaurentPoly constant = LaurentPoly::one();
    CHECK_THROWS_AS((void)trig_zeros(constant), std::invalid_argument);

    // Leading harmonic numerically absent: order declared by the support is 2
    // but the top coefficient is null.
    LaurentPoly degenerate;
    degenerate.set_coeff(2, cplx(1e-30, 0.0));
    degenerate.set_coeff(-2, cplx(1e-30, 0.0));
    degenerate.set_coeff(1, cplx(0.5, 0.0));
    degenerate.set_coeff(-1, cplx(0.5, 0.0));
    CHECK_THROWS_AS((void)trig_zeros(degenerate), std::domain_error);
}

TEST_CASE("zero-free trigonometric polynomials are reported, not hidden") {
    // 3 + cos th is real on the circle with order 1 but has no real zeros;
    // the algebraic roots sit off the circle and the flags must say so.
    LaurentPoly p;
    p.set_coeff(0, cplx(3.0, 0.0));
    p.set_coeff(1, cplx(0.5, 0.0));
    p.set_coeff(-1, cplx(0.5, 0.0));
    const ZeroSet zs = trig_zeros(p);
    CHECK(zs.structure_violation);
    CHECK(zs.max_off_circle > 1e-6);
}
