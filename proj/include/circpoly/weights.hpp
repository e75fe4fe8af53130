#pragma once
// Positive analytic weights w(theta) on the unit circle.  The induced measure
// is dmu = w(theta) dtheta / (2 pi), normalized to a probability measure (the
// zeroth moment is 1); validate_weight computes the normalizer by spectrally
// convergent quadrature and screens positivity on a dense grid.
//
// Supported families:
//   lebesgue          w = 1
//   cosine_poly       w = c0 + sum_k (A_k cos k theta + B_k sin k theta)
//   exp_trig          w ~ exp(p cos theta + q sin theta)
//   bernstein_szego   w = (1 - |a|^2)/|1 - a e^{i theta}|^2,  |a| < 1

#include "circpoly/laurent.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace circpoly {

enum class WeightKind { lebesgue, cosine_poly, exp_trig, bernstein_szego };

struct WeightSpec {
    WeightKind kind = WeightKind::lebesgue;
    // cosine_poly: constant term and harmonic coefficients (index k-1 <-> harmonic k).
    double constant = 1.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
    // exp_trig parameters.
    double p = 0.0;
    double q = 0.0;
    // bernstein_szego parameter.
    cplx alpha0{0.0, 0.0};
    // Raw density divided by this so the measure has total mass 1.
    double normalization = 1.0;
    bool validated = false;
    std::string name; // preset name or "custom"; used only for report labels
};

WeightSpec make_lebesgue();
WeightSpec make_cosine_poly(double constant, std::vector<double> cos_coeffs,
                            std::vector<double> sin_coeffs = {});
WeightSpec make_exp_trig(double p, double q = 0.0);
WeightSpec make_bernstein_szego(cplx alpha0);

// Named presets: lebesgue | cosine | asymmetric | expcos | bernstein.
WeightSpec preset_weight(const std::string& name);
// Parse/serialize the JSON weight description used by the CLI.
WeightSpec weight_from_json(const std::string& text);
std::string weight_to_json(const WeightSpec& spec);

// Unnormalized density (independent of validation state).
double raw_weight(const WeightSpec& spec, double theta);
// Normalized density; requires a validated spec.
double eval_weight(const WeightSpec& spec, double theta);

// Positivity screen (4096-point grid, min > 1e-9) + normalizer computation by
// node-doubling periodic trapezoid quadrature.  Throws std::domain_error on a
// nonpositive weight, std::runtime_error if quadrature fails to converge.
WeightSpec validate_weight(WeightSpec spec, std::size_t node_cap = std::size_t(1) << 20);

} // namespace circpoly
