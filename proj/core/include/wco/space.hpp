#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wco/series.hpp"

namespace wco {

/// Weight sequence beta(0..N) of a weighted Hardy space: the norm is
/// sum |f_n|^2 beta(n)^2 and e_n = z^n / beta(n) is an orthonormal basis.
class WeightSequence {
public:
    WeightSequence(std::vector<double> beta, std::string label);

    /// The classical Hardy space, beta(n) = 1.
    static WeightSequence hardy(std::size_t max_degree);

    /// The space whose kernel at w is (1 - conj(w) z)^(-kappa), kappa >= 1.
    /// Matching the kernel expansion against the general formula
    /// sum conj(w)^n z^n / beta(n)^2 forces beta(n)^2 * binom(n+kappa-1, n) = 1,
    /// so beta(n) = binom(n+kappa-1, n)^(-1/2), computed via log-Gamma.
    static WeightSequence beta_kappa(double kappa, std::size_t max_degree);

    double beta(std::size_t n) const { return beta_[n]; }
    std::size_t max_degree() const { return beta_.size() - 1; }
    const std::string& label() const { return label_; }

private:
    std::vector<double> beta_;
    std::string label_;
};

/// Generalized binomial coefficient binom(n+kappa-1, n) via log-Gamma.
double binom_kappa(double kappa, std::size_t n);

/// Truncated coefficients of the reproducing kernel K_w^(order): pairing a
/// polynomial against it returns the order-th derivative at w.
struct KernelVector {
    Complex base_point;
    std::size_t order;
    TruncatedSeries coeffs;
};

/// Coefficient of z^m is (m!/(m-order)!) * conj(w)^(m-order) / beta(m)^2 for
/// m >= order, zero below.  Requires |w| < 1 and weights covering degree N.
KernelVector kernel(Complex w, std::size_t order, const WeightSequence& weights, std::size_t N);

/// sum_n f_n conj(g_n) beta(n)^2 over the common degree range.
Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const WeightSequence& weights);

/// |<f, K_w^(order)> - f^(order)(w)|, a residual for tests; exactly the
/// truncation tail for polynomial inputs of degree <= N.
double reproducing_check(const TruncatedSeries& f, Complex w, std::size_t order, const WeightSequence& weights);

/// Running partial norms P_m = sum_{n<=m} |f_n|^2 beta(n)^2, m = 0..N.
std::vector<double> norm_profile(const TruncatedSeries& f, const WeightSequence& weights);

/// Divergence heuristic shared with the Koenigs membership report: flags the
/// profile when the mean increment over its last quartile exceeds the slope
/// threshold.  A truncation can never prove membership either way; this is a
/// report, not a certificate.
bool divergence_flag(const std::vector<double>& profile, double slope_threshold = 1e-3);

/// Mean increment over the last quartile of the profile.
double profile_tail_slope(const std::vector<double>& profile);

}  // namespace wco
