#pragma once
// Laurent polynomials  p(z) = sum_{k=lo..hi} c_k z^k  with complex binary64
// coefficients.  Every polynomial object in the library is one of these:
// trigonometric basis elements, orthogonal polynomials on the circle and
// their reversals, CMV basis elements, Cauchy-transform densities.
//
// A Laurent polynomial is "real on the circle" when c_{-k} = conj(c_k);
// realness is always *checked* at the places that rely on it, never assumed.

#include <complex>
#include <vector>

namespace circpoly {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

class LaurentPoly {
public:
    LaurentPoly() = default;                       // the zero polynomial
    LaurentPoly(int lo, std::vector<cplx> coeffs); // coeffs[j] multiplies z^(lo+j)

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int k, cplx c = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    // Inclusive power range; for the zero polynomial lo() > hi().
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }

    cplx coeff(int k) const; // 0 outside the stored range
    void set_coeff(int k, cplx v);

    // Evaluate by split Horner (nonnegative powers in z, negative in 1/z).
    // z = 0 is a domain error when negative powers are present.
    cplx eval(cplx z) const;
    // Derivative with respect to theta along z = e^{i theta}:
    // d/dtheta p(e^{i theta}) = sum_k (i k) c_k e^{i k theta}.
    cplx eval_dtheta(cplx z_on_circle) const;

    LaurentPoly shifted(int m) const;        // z^m * p
    LaurentPoly conj_reflected() const;      // conj(p(1/conj z)): c_k -> conj(c_{-k})
    // Reversal of a degree-n polynomial: z^n * conj(p(1/conj z)).
    LaurentPoly star(int n) const { return conj_reflected().shifted(n); }

    double max_abs_coeff() const;
    bool real_on_circle(double tol) const;   // |c_{-k} - conj(c_k)| <= tol for all k
    LaurentPoly trimmed(double eps = 0.0) const; // drop leading/trailing coeffs <= eps

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(cplx s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(cplx s, LaurentPoly p) { return p *= s; }
    friend LaurentPoly operator*(LaurentPoly p, cplx s) { return p *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b); // convolution

private:
    int lo_ = 0;
    std::vector<cplx> coeffs_; // empty <=> zero polynomial
};

} // namespace circpoly
