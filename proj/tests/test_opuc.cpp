#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "circpoly/moments.hpp"
#include "circpoly/opuc.hpp"
#include "circpoly/weights.hpp"

using namespace circpoly;

namespace {

OpucSystem build_for(const char* preset, int n_max) {
    const WeightSpec w = validate_weight(preset_weight(preset));
    return build_opuc(trig_moments(w, n_max), n_max);
}

// Quadrature oracle for <f,g> = (1/2pi) int conj(f) g w dtheta, independent of
// the moment table the builder consumed.
cplx quad_inner(const WeightSpec& w, const LaurentPoly& f, const LaurentPoly& g,
                int nodes = 4096) {
    cplx s = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double th = 2.0 * kPi * j / nodes;
        const cplx z = std::polar(1.0, th);
        s += std::conj(f.eval(z)) * g.eval(z) * eval_weight(w, th);
    }
    return s / double(nodes);
}

} // namespace

TEST_CASE("flat weight: all reflection coefficients vanish and Phi_n = z^n") {
    const int N = 10;
    const OpucSystem sys = build_for("lebesgue", N);
    for (int n = 0; n < N; ++n) CHECK(std::abs(sys.alpha[n]) < 1e-14);
    for (int n = 0; n <= N; ++n) {
        CHECK(sys.kappa[n] == doctest::Approx(1.0).epsilon(1e-14));
        LaurentPoly zn;
        zn.set_coeff(n, 1.0);
        CHECK((sys.phi[n] - zn).max_abs_coeff() < 1e-14);
        LaurentPoly one = LaurentPoly::one();
        CHECK((sys.phi_star[n] - one).max_abs_coeff() < 1e-14);
    }
}

TEST_CASE("geometric-moment weight: single nonzero reflection coefficient") {
    const WeightSpec w = validate_weight(preset_weight("bernstein"));
    const int N = 8;
    const MomentTable m = trig_moments(w, N);
    for (int k = 0; k <= N; ++k) {
        CHECK(std::abs(m.moment(k) - cplx(std::pow(0.5, k), 0.0)) < 1e-13);
    }
    const OpucSystem sys = build_opuc(m, N);
    CHECK(std::abs(sys.alpha[0] - cplx(0.5, 0.0)) < 1e-13);
    for (int n = 1; n < N; ++n) CHECK(std::abs(sys.alpha[n]) < 1e-12);
}

TEST_CASE("frozen values: exponential weight") {
    const OpucSystem sys = build_for("expcos", 6);
    CHECK(sys.alpha[0].real() == doctest::Approx(0.44638996589653451).epsilon(1e-12));
    CHECK(std::abs(sys.alpha[0].imag()) < 1e-13);
    CHECK(sys.kappa[1] == doctest::Approx(1.1175200488607673).epsilon(1e-12));
    CHECK(sys.kappa[2] == doctest::Approx(1.1249770995822029).epsilon(1e-12));
    CHECK(sys.kappa[3] == doctest::Approx(1.1251924424284636).epsilon(1e-12));
    CHECK(sys.kappa[4] == doctest::Approx(1.1251958932640359).epsilon(1e-12));
}

TEST_CASE("frozen values: cosine weight has rational reflection coefficients") {
    const OpucSystem sys = build_for("cosine", 6);
    CHECK(std::abs(sys.alpha[0] - cplx(0.25, 0.0)) < 1e-13);
    CHECK(std::abs(sys.alpha[1] - cplx(-1.0 / 15.0, 0.0)) < 1e-13);
    CHECK(std::abs(sys.alpha[2] - cplx(1.0 / 56.0, 0.0)) < 1e-13);
    CHECK(std::abs(sys.alpha[3] - cplx(-0.004784688995215311, 0.0)) < 1e-13);
    CHECK(sys.kappa[2] * sys.kappa[2] == doctest::Approx(15.0 / 14.0).epsilon(1e-12));
    CHECK(sys.kappa[4] * sys.kappa[4] == doctest::Approx(1.0717948717948718).epsilon(1e-12));
}

TEST_CASE("frozen values: tilted weight has genuinely complex coefficients") {
    const WeightSpec w = validate_weight(preset_weight("asymmetric"));
    const MomentTable m = trig_moments(w, 6);
    CHECK(std::abs(m.moment(1) - cplx(0.25, -0.125)) < 1e-13);
    const OpucSystem sys = build_opuc(m, 6);
    CHECK(std::abs(sys.alpha[0] - cplx(0.25, -0.125)) < 1e-13);
    CHECK(std::abs(sys.alpha[1] - cplx(-3.0 / 59.0, 4.0 / 59.0)) < 1e-13);
    CHECK(std::abs(sys.alpha[2] - cplx(0.0046296296296296296, -0.025462962962962963)) < 1e-13);
}

TEST_CASE("monic family is orthogonal with norms kappa^-2") {
    for (const char* name : {"cosine", "asymmetric", "expcos", "bernstein"}) {
        CAPTURE(name);
        const WeightSpec w = validate_weight(preset_weight(name));
        const int N = 8;
        const MomentTable m = trig_moments(w, N);
        const OpucSystem sys = build_opuc(m, N);
        for (int j = 0; j <= N; ++j) {
            for (int k = 0; k <= j; ++k) {
                const cplx g = inner_complex(sys.phi[j], sys.phi[k], m);
                const cplx want = (j == k) ? cplx(1.0 / (sys.kappa[j] * sys.kappa[j]), 0.0)
                                           : cplx(0.0);
                CHECK(std::abs(g - want) < 1e-12);
            }
        }
    }
}

TEST_CASE("moment-table inner product agrees with direct quadrature") {
    const WeightSpec w = validate_weight(preset_weight("expcos"));
    const int N = 5;
    const MomentTable m = trig_moments(w, N);
    const OpucSystem sys = build_opuc(m, N);
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k)
            if (j + k <= 2 * N && std::abs(j - k) <= N) {
                const cplx table = inner_complex(sys.phi[j], sys.phi[k], m);
                const cplx quad = quad_inner(w, sys.phi[j], sys.phi[k]);
                CHECK(std::abs(table - quad) < 1e-12);
            }
}

TEST_CASE("recurrence holds coefficientwise") {
    for (const char* name : {"lebesgue", "cosine", "asymmetric", "expcos", "bernstein"}) {
        CAPTURE(name);
        const OpucSystem sys = build_for(name, 8);
        for (int n = 0; n < 8; ++n) {
            const LaurentPoly step =
                sys.phi[n].shifted(1) - std::conj(sys.alpha[n]) * sys.phi_star[n];
            CHECK((sys.phi[n + 1] - step).max_abs_coeff() < 1e-13);
            // The stored reversal really is the coefficient reversal.
            CHECK((sys.phi_star[n] - reversed(sys.phi[n], n)).max_abs_coeff() == 0.0);
        }
    }
}

TEST_CASE("reversal is an involution and matches its pointwise definition") {
    LaurentPoly p;
    p.set_coeff(0, cplx(0.3, -0.7));
    p.set_coeff(1, cplx(-1.1, 0.2));
    p.set_coeff(3, cplx(0.0, 2.0));
    const int deg = 3;
    const LaurentPoly r = reversed(p, deg);
    CHECK((reversed(r, deg) - p).max_abs_coeff() < 1e-15);
    for (cplx z : {cplx(0.4, 0.3), cplx(-1.2, 0.9), cplx(0.0, -0.5)}) {
        const cplx want = std::pow(z, deg) * std::conj(p.eval(cplx(1.0, 0.0) / std::conj(z)));
        CHECK(std::abs(r.eval(z) - want) < 1e-12 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("basis rotations: chi and x families are orthonormal Laurent bases") {
    for (const char* name : {"expcos", "asymmetric"}) {
        CAPTURE(name);
        const WeightSpec w = validate_weight(preset_weight(name));
        const int N = 7;
        const MomentTable m = trig_moments(w, N);
        const OpucSystem sys = build_opuc(m, N);
        std::vector<LaurentPoly> chi, x;
        for (int n = 0; n <= N; ++n) {
            chi.push_back(cmv_chi(sys, n));
            x.push_back(cmv_x(sys, n));
        }
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= N; ++k) {
                const cplx want = (j == k) ? cplx(1.0) : cplx(0.0);
                CHECK(std::abs(inner_complex(chi[j], chi[k], m) - want) < 1e-11);
                CHECK(std::abs(inner_complex(x[j], x[k], m) - want) < 1e-11);
            }
        // x_n is the conjugate-reflection of chi_n.
        for (int n = 0; n <= N; ++n)
            for (cplx z : {cplx(0.7, 0.2), cplx(-0.3, 1.1)}) {
                const cplx want = std::conj(chi[n].eval(cplx(1.0, 0.0) / std::conj(z)));
                CHECK(std::abs(x[n].eval(z) - want) < 1e-11 * (1.0 + std::abs(want)));
            }
    }
}

TEST_CASE("reproducing kernel: closed forms match the direct sum") {
    for (const char* name : {"lebesgue", "cosine", "asymmetric", "expcos"}) {
        CAPTURE(name);
        const OpucSystem sys = build_for(name, 9);
        const cplx pts[] = {cplx(0.3, 0.4), cplx(-0.8, 0.1), cplx(1.4, -0.6), cplx(0.05, -0.9)};
        for (int n = 0; n <= 8; ++n)
            for (cplx zeta : pts)
                for (cplx z : pts) {
                    if (std::abs(std::conj(zeta) * z - 1.0) < 1e-6) continue;
                    const cplx oracle = cd_kernel_opuc_sum(sys, n, zeta, z);
                    const double scale = 1.0 + std::abs(oracle);
                    CHECK(std::abs(cd_kernel_opuc(sys, n, zeta, z) - oracle) < 1e-10 * scale);
                    CHECK(std::abs(cd_kernel_opuc_alt(sys, n, zeta, z) - oracle) < 1e-10 * scale);
                }
    }
}

TEST_CASE("reproducing kernel rejects the singular diagonal") {
    const OpucSystem sys = build_for("cosine", 4);
    const cplx z(0.6, 0.35);
    const cplx zeta = cplx(1.0, 0.0) / std::conj(z); // conj(zeta) * z = 1 exactly
    CHECK_THROWS_AS((void)cd_kernel_opuc(sys, 3, zeta, z), std::domain_error);
}

TEST_CASE("degenerate moment tables are rejected") {
    MomentTable m;
    m.n_max = 3;
    m.c = {cplx(1.0), cplx(1.0), cplx(1.0), cplx(1.0)}; // point mass at theta = 0
    CHECK_THROWS_AS((void)build_opuc(m, 3), std::domain_error);
}

TEST_CASE("builder needs a wide-enough moment table") {
    const WeightSpec w = validate_weight(preset_weight("cosine"));
    const MomentTable m = trig_moments(w, 3);
    CHECK_THROWS_AS((void)build_opuc(m, 5), std::out_of_range);
}
