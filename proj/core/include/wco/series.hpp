#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wco/errors.hpp"

namespace wco {

using Complex = std::complex<double>;

/// Degree-N complex Taylor polynomial standing in for an analytic function
/// on the unit disk.  Index n holds the coefficient of z^n; there are always
/// exactly trunc_degree()+1 coefficients.
///
/// Binary operations truncate the result to the smaller operand degree, so
/// a result never claims more precision than its inputs carried.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, Complex{0.0}) {}
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(std::size_t trunc_degree);
    static TruncatedSeries constant(Complex value, std::size_t trunc_degree);
    /// The monomial c * z^k.
    static TruncatedSeries monomial(std::size_t k, Complex c, std::size_t trunc_degree);
    /// The identity function z.
    static TruncatedSeries identity(std::size_t trunc_degree);
    /// The geometric-type series c0 / (1 - q z), exact coefficients c0 * q^n.
    static TruncatedSeries geometric(Complex c0, Complex q, std::size_t trunc_degree);

    std::size_t trunc_degree() const { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero beyond the truncation degree.
    Complex coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{0.0}; }

    /// Same polynomial re-truncated to degree n.  Raising the degree pads
    /// with zeros, which is exact when the series is itself a polynomial.
    TruncatedSeries with_degree(std::size_t n) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(Complex scalar);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(const TruncatedSeries& s);
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator*(Complex scalar, TruncatedSeries s);

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated to the smaller operand degree.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Taylor coefficients of outer(inner(z)) through the common truncation
/// degree, by Horner evaluation over truncated series.  The outer operand is
/// treated as the exact polynomial given by its coefficients, so the output
/// is the truncation of polynomial-in-polynomial composition; callers that
/// need f's tail must truncate f at a degree where the tail is negligible on
/// |z| <= sup|inner|.  Requires |inner(0)| < 1.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse r with compose(s, r) = compose(r, s) = z through the
/// truncation degree, by Newton iteration with doubling precision.
/// Requires s(0) = 0 and s'(0) != 0.
TruncatedSeries revert(const TruncatedSeries& s);

/// Termwise derivative, degree reduced by one.
TruncatedSeries derivative(const TruncatedSeries& s);

/// Horner evaluation of the truncated polynomial.  Meaningful for |z| < 1;
/// outside the disk the truncation tail is uncontrolled.
Complex evaluate(const TruncatedSeries& s, Complex z);

/// Multiplicative inverse 1/s; requires s(0) != 0.
TruncatedSeries reciprocal(const TruncatedSeries& s);

/// s^k by repeated multiplication (k >= 0).
TruncatedSeries pow_int(const TruncatedSeries& s, unsigned k);

/// max_k |a_k - b_k| through the smaller truncation degree.
double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace wco
