#include "circpoly/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circpoly {

LaurentPoly::LaurentPoly(int lo, std::vector<cplx> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
    *this = trimmed();
}

LaurentPoly LaurentPoly::monomial(int k, cplx c) {
    if (c == cplx(0.0)) return LaurentPoly();
    LaurentPoly p;
    p.lo_ = k;
    p.coeffs_ = {c};
    return p;
}

cplx LaurentPoly::coeff(int k) const {
    if (is_zero() || k < lo() || k > hi()) return 0.0;
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

void LaurentPoly::set_coeff(int k, cplx v) {
    if (is_zero()) {
        lo_ = k;
        coeffs_ = {v};
        return;
    }
    if (k < lo()) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo() - k), cplx(0.0));
        lo_ = k;
    } else if (k > hi()) {
        coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k - hi()), cplx(0.0));
    }
    coeffs_[static_cast<std::size_t>(k - lo_)] = v;
}

cplx LaurentPoly::eval(cplx z) const {
    if (is_zero()) return 0.0;
    if (z == cplx(0.0)) {
        if (lo() < 0)
            throw std::domain_error("LaurentPoly::eval: z = 0 with negative powers present");
        return coeff(0);
    }
    // Nonnegative part: Horner in z from the top power down to max(lo,0).
    cplx pos = 0.0;
    if (hi() >= 0) {
        for (int k = hi(); k >= std::max(lo(), 0); --k) pos = pos * z + coeff(k);
        pos *= std::pow(z, std::max(lo(), 0)); // only matters when lo() > 0
    }
    // Negative part: Horner in 1/z from the bottom power up to -1.
    cplx neg = 0.0;
    if (lo() < 0) {
        const cplx w = cplx(1.0) / z;
        for (int k = lo(); k <= std::min(hi(), -1); ++k) neg = neg * w + coeff(k);
        // neg now equals sum_{k=lo..-1} c_k z^{k - lo ... }: unwind the offset.
        neg *= std::pow(w, -std::min(hi(), -1));
    }
    return pos + neg;
}

cplx LaurentPoly::eval_dtheta(cplx z_on_circle) const {
    LaurentPoly d;
    for (int k = lo(); k <= hi(); ++k)
        if (k != 0) d.set_coeff(k, cplx(0.0, static_cast<double>(k)) * coeff(k));
    return d.eval(z_on_circle);
}

LaurentPoly LaurentPoly::shifted(int m) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += m;
    return p;
}

LaurentPoly LaurentPoly::conj_reflected() const {
    LaurentPoly p;
    for (int k = lo(); k <= hi(); ++k) p.set_coeff(-k, std::conj(coeff(k)));
    return p.trimmed();
}

double LaurentPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool LaurentPoly::real_on_circle(double tol) const {
    const int m = std::max(std::abs(lo()), std::abs(hi()));
    for (int k = 0; k <= m; ++k)
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    return true;
}

LaurentPoly LaurentPoly::trimmed(double eps) const {
    int a = lo(), b = hi();
    while (a <= b && std::abs(coeff(a)) <= eps) ++a;
    while (b >= a && std::abs(coeff(b)) <= eps) --b;
    LaurentPoly p;
    if (a > b) return p; // everything trimmed: zero polynomial
    p.lo_ = a;
    p.coeffs_.assign(coeffs_.begin() + (a - lo_), coeffs_.begin() + (b - lo_ + 1));
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (int k = rhs.lo(); k <= rhs.hi(); ++k) set_coeff(k, coeff(k) + rhs.coeff(k));
    *this = trimmed();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (int k = rhs.lo(); k <= rhs.hi(); ++k) set_coeff(k, coeff(k) - rhs.coeff(k));
    *this = trimmed();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
    if (s == cplx(0.0)) {
        *this = LaurentPoly();
        return *this;
    }
    for (cplx& c : coeffs_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    LaurentPoly p;
    p.lo_ = a.lo() + b.lo();
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, cplx(0.0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return p.trimmed();
}

} // namespace circpoly
