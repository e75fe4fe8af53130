#include "circpoly/weights.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace circpoly {

namespace {

// Periodic trapezoid mean of f over [0, 2pi): (1/N) sum f(2 pi j / N),
// doubling N until two refinements agree to tol.  Spectrally accurate for the
// analytic integrands used here.
template <typename F>
double periodic_mean(F&& f, double tol, std::size_t node_cap) {
    std::size_t n = 256;
    auto mean_at = [&](std::size_t nodes) {
        double s = 0.0;
        for (std::size_t j = 0; j < nodes; ++j)
            s += f(2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes));
        return s / static_cast<double>(nodes);
    };
    double prev = mean_at(n);
    while (true) {
        if (n * 2 > node_cap)
            throw std::runtime_error("quadrature failed to converge within the node cap");
        n *= 2;
        const double cur = mean_at(n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
}

} // namespace

WeightSpec make_lebesgue() {
    WeightSpec s;
    s.kind = WeightKind::lebesgue;
    s.name = "lebesgue";
    return s;
}

WeightSpec make_cosine_poly(double constant, std::vector<double> cos_coeffs,
                            std::vector<double> sin_coeffs) {
    WeightSpec s;
    s.kind = WeightKind::cosine_poly;
    s.constant = constant;
    s.cos_coeffs = std::move(cos_coeffs);
    s.sin_coeffs = std::move(sin_coeffs);
    s.name = "custom";
    return s;
}

WeightSpec make_exp_trig(double p, double q) {
    WeightSpec s;
    s.kind = WeightKind::exp_trig;
    s.p = p;
    s.q = q;
    s.name = "custom";
    return s;
}

WeightSpec make_bernstein_szego(cplx alpha0) {
    if (std::abs(alpha0) >= 1.0)
        throw std::domain_error("bernstein_szego weight requires |alpha0| < 1");
    WeightSpec s;
    s.kind = WeightKind::bernstein_szego;
    s.alpha0 = alpha0;
    s.name = "custom";
    return s;
}

WeightSpec preset_weight(const std::string& name) {
    WeightSpec s;
    if (name == "lebesgue") {
        s = make_lebesgue();
    } else if (name == "cosine") {
        s = make_cosine_poly(1.0, {0.5});
    } else if (name == "asymmetric") {
        s = make_cosine_poly(1.0, {0.5}, {0.25});
    } else if (name == "expcos") {
        s = make_exp_trig(1.0);
    } else if (name == "bernstein") {
        s = make_bernstein_szego(cplx(0.5, 0.0));
    } else {
        throw std::invalid_argument("unknown weight preset: " + name);
    }
    s.name = name;
    return s;
}

double raw_weight(const WeightSpec& spec, double theta) {
    switch (spec.kind) {
        case WeightKind::lebesgue:
            return 1.0;
        case WeightKind::cosine_poly: {
            double w = spec.constant;
            for (std::size_t k = 0; k < spec.cos_coeffs.size(); ++k)
                w += spec.cos_coeffs[k] * std::cos(static_cast<double>(k + 1) * theta);
            for (std::size_t k = 0; k < spec.sin_coeffs.size(); ++k)
                w += spec.sin_coeffs[k] * std::sin(static_cast<double>(k + 1) * theta);
            return w;
        }
        case WeightKind::exp_trig:
            return std::exp(spec.p * std::cos(theta) + spec.q * std::sin(theta));
        case WeightKind::bernstein_szego: {
            const cplx den = cplx(1.0) - spec.alpha0 * std::polar(1.0, theta);
            return (1.0 - std::norm(spec.alpha0)) / std::norm(den);
        }
    }
    throw std::logic_error("raw_weight: unhandled weight kind");
}

double eval_weight(const WeightSpec& spec, double theta) {
    if (!spec.validated)
        throw std::invalid_argument("eval_weight: weight spec has not been validated");
    return raw_weight(spec, theta) / spec.normalization;
}

WeightSpec validate_weight(WeightSpec spec, std::size_t node_cap) {
    // Positivity screen on a dense grid.  Analytic weights cannot hide a sign
    // change between nodes at this resolution for the families supported here.
    constexpr int kGrid = 4096;
    double wmin = raw_weight(spec, 0.0);
    for (int j = 1; j < kGrid; ++j)
        wmin = std::min(wmin, raw_weight(spec, 2.0 * kPi * j / kGrid));
    if (wmin <= 1e-9)
        throw std::domain_error("weight is not strictly positive on the circle");

    spec.normalization =
        periodic_mean([&](double th) { return raw_weight(spec, th); }, 1e-14, node_cap);
    spec.validated = true;
    return spec;
}

// ------------------------------------------------------------------- JSON ---

WeightSpec weight_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    // Optional fields default quietly, so a misspelled or misplaced key would
    // silently change the weight; reject anything outside the kind's schema.
    const auto check_keys = [&j](std::initializer_list<const char*> allowed) {
        for (const auto& item : j.items()) {
            bool known = false;
            for (const char* k : allowed)
                if (item.key() == k) known = true;
            if (!known)
                throw std::invalid_argument("unexpected key in weight spec: " + item.key());
        }
    };
    if (j.contains("preset")) {
        check_keys({"preset"});
        return preset_weight(j.at("preset").get<std::string>());
    }

    const std::string kind = j.at("kind").get<std::string>();
    WeightSpec s;
    if (kind == "lebesgue") {
        check_keys({"kind", "name"});
        s = make_lebesgue();
    } else if (kind == "cosine_poly") {
        check_keys({"kind", "name", "constant", "cos_coeffs", "sin_coeffs"});
        s = make_cosine_poly(j.value("constant", 1.0),
                             j.value("cos_coeffs", std::vector<double>{}),
                             j.value("sin_coeffs", std::vector<double>{}));
    } else if (kind == "exp_trig") {
        check_keys({"kind", "name", "p", "q"});
        s = make_exp_trig(j.value("p", 0.0), j.value("q", 0.0));
    } else if (kind == "bernstein_szego") {
        check_keys({"kind", "name", "alpha0_re", "alpha0_im"});
        s = make_bernstein_szego(cplx(j.value("alpha0_re", 0.0), j.value("alpha0_im", 0.0)));
    } else {
        throw std::invalid_argument("unknown weight kind: " + kind);
    }
    if (j.contains("name")) s.name = j.at("name").get<std::string>();
    return s;
}

std::string weight_to_json(const WeightSpec& spec) {
    nlohmann::json j;
    switch (spec.kind) {
        case WeightKind::lebesgue:
            j["kind"] = "lebesgue";
            break;
        case WeightKind::cosine_poly:
            j["kind"] = "cosine_poly";
            j["constant"] = spec.constant;
            j["cos_coeffs"] = spec.cos_coeffs;
            j["sin_coeffs"] = spec.sin_coeffs;
            break;
        case WeightKind::exp_trig:
            j["kind"] = "exp_trig";
            j["p"] = spec.p;
            j["q"] = spec.q;
            break;
        case WeightKind::bernstein_szego:
            j["kind"] = "bernstein_szego";
            j["alpha0_re"] = spec.alpha0.real();
            j["alpha0_im"] = spec.alpha0.imag();
            break;
    }
    j["name"] = spec.name;
    return j.dump();
}

} // namespace circpoly
