#include "wco/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(std::size_t trunc_degree) {
    return TruncatedSeries(std::vector<Complex>(trunc_degree + 1, Complex{0.0}));
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t trunc_degree) {
    auto s = zero(trunc_degree);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, Complex c, std::size_t trunc_degree) {
    if (k > trunc_degree) throw std::invalid_argument("monomial: exponent above truncation degree");
    auto s = zero(trunc_degree);
    s.coeffs_[k] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t trunc_degree) {
    return monomial(1, Complex{1.0}, trunc_degree);
}

TruncatedSeries TruncatedSeries::geometric(Complex c0, Complex q, std::size_t trunc_degree) {
    auto s = zero(trunc_degree);
    Complex c = c0;
    for (std::size_t n = 0; n <= trunc_degree; ++n) {
        s.coeffs_[n] = c;
        c *= q;
    }
    return s;
}

TruncatedSeries TruncatedSeries::with_degree(std::size_t n) const {
    std::vector<Complex> c(n + 1, Complex{0.0});
    const std::size_t keep = std::min(n, trunc_degree());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(keep + 1), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    *this = *this + rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    *this = *this - rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(Complex scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    const std::size_t n = std::min(lhs.trunc_degree(), rhs.trunc_degree());
    lhs.coeffs_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) lhs.coeffs_[k] += rhs.coeffs_[k];
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    const std::size_t n = std::min(lhs.trunc_degree(), rhs.trunc_degree());
    lhs.coeffs_.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) lhs.coeffs_[k] -= rhs.coeffs_[k];
    return lhs;
}

TruncatedSeries operator-(const TruncatedSeries& s) {
    TruncatedSeries r = s;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const std::size_t n = std::min(lhs.trunc_degree(), rhs.trunc_degree());
    std::vector<Complex> out(n + 1, Complex{0.0});
    for (std::size_t i = 0; i <= n; ++i) {
        const Complex a = lhs.coeffs_[i];
        if (a == Complex{0.0}) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a * rhs.coeffs_[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries operator*(Complex scalar, TruncatedSeries s) {
    s *= scalar;
    return s;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (std::abs(inner.coeff(0)) >= 1.0)
        throw Error(Errc::InnerConstantTooLarge,
                    "composition requires |inner(0)| < 1, got " + std::to_string(std::abs(inner.coeff(0))));
    const std::size_t n = std::min(outer.trunc_degree(), inner.trunc_degree());
    const TruncatedSeries in = inner.with_degree(n);
    // Horner over truncated series: result = (...(o_N * in + o_{N-1}) * in + ...) + o_0.
    TruncatedSeries acc = TruncatedSeries::constant(outer.coeff(n), n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * in;
        acc += TruncatedSeries::constant(outer.coeff(k), n);
    }
    return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
    const Complex s0 = s.coeff(0);
    if (s0 == Complex{0.0})
        throw Error(Errc::NotInvertible, "reciprocal of a series vanishing at 0");
    const std::size_t n = s.trunc_degree();
    std::vector<Complex> out(n + 1);
    out[0] = 1.0 / s0;
    // (s * out)_k = 0 for k >= 1 gives the usual recurrence.
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{0.0};
        for (std::size_t j = 1; j <= k; ++j) acc += s.coeff(j) * out[k - j];
        out[k] = -acc / s0;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries revert(const TruncatedSeries& s) {
    if (s.coeff(0) != Complex{0.0} || s.coeff(1) == Complex{0.0})
        throw Error(Errc::NotInvertible, "reversion requires s(0) = 0 and s'(0) != 0");
    const std::size_t n = s.trunc_degree();
    // Newton iteration r <- r - (s(r) - z) / s'(r), doubling the working
    // degree each step; quadratic convergence makes each step exact through
    // the current degree.
    TruncatedSeries r = TruncatedSeries::monomial(1, 1.0 / s.coeff(1), std::min<std::size_t>(1, n));
    const TruncatedSeries ds = derivative(s).with_degree(n);
    std::size_t m = 1;
    while (m < n) {
        m = std::min(2 * m + 1, n);
        const TruncatedSeries rm = r.with_degree(m);
        const TruncatedSeries sm = s.with_degree(m);
        const TruncatedSeries err = compose(sm, rm) - TruncatedSeries::identity(m);
        const TruncatedSeries slope = compose(ds.with_degree(m), rm);
        r = rm - err * reciprocal(slope);
    }
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    const std::size_t n = s.trunc_degree();
    if (n == 0) return TruncatedSeries::zero(0);
    std::vector<Complex> out(n);
    for (std::size_t k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(k) * s.coeff(k);
    return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
    Complex acc{0.0};
    for (std::size_t k = s.trunc_degree() + 1; k-- > 0;) acc = acc * z + s.coeff(k);
    return acc;
}

TruncatedSeries pow_int(const TruncatedSeries& s, unsigned k) {
    TruncatedSeries acc = TruncatedSeries::constant(1.0, s.trunc_degree());
    for (unsigned i = 0; i < k; ++i) acc = acc * s;
    return acc;
}

double max_coeff_distance(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.trunc_degree(), b.trunc_degree());
    double worst = 0.0;
    for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

}  // namespace wco
