#include "wco/space.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace wco {

WeightSequence::WeightSequence(std::vector<double> beta, std::string label)
    : beta_(std::move(beta)), label_(std::move(label)) {
    if (beta_.empty()) throw std::invalid_argument("WeightSequence: empty");
    for (double b : beta_)
        if (!(b > 0.0)) throw std::invalid_argument("WeightSequence: weights must be positive");
}

WeightSequence WeightSequence::hardy(std::size_t max_degree) {
    return WeightSequence(std::vector<double>(max_degree + 1, 1.0), "hardy");
}

double binom_kappa(double kappa, std::size_t n) {
    return std::exp(std::lgamma(static_cast<double>(n) + kappa) - std::lgamma(static_cast<double>(n) + 1.0) -
                    std::lgamma(kappa));
}

WeightSequence WeightSequence::beta_kappa(double kappa, std::size_t max_degree) {
    if (!(kappa >= 1.0)) throw std::invalid_argument("beta_kappa: kappa must be >= 1");
    std::vector<double> beta(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n)
        beta[n] = std::exp(-0.5 * (std::lgamma(static_cast<double>(n) + kappa) -
                                   std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(kappa)));
    char label[48];
    std::snprintf(label, sizeof label, "beta_kappa(%g)", kappa);
    return WeightSequence(std::move(beta), label);
}

KernelVector kernel(Complex w, std::size_t order, const WeightSequence& weights, std::size_t N) {
    if (std::abs(w) >= 1.0)
        throw Error(Errc::BasePointOutsideDisk, "kernel base point must lie in the open disk");
    if (weights.max_degree() < N)
        throw std::invalid_argument("kernel: weights cover degree " + std::to_string(weights.max_degree()) +
                                    " < " + std::to_string(N));
    std::vector<Complex> c(N + 1, Complex{0.0});
    if (c.empty()) throw std::invalid_argument("kernel: degree overflow");
    const Complex wbar = std::conj(w);
    // falling factorial m!/(m-order)! accumulated alongside wbar^(m-order)
    Complex wpow{1.0};
    for (std::size_t m = order; m <= N; ++m) {
        double ff = 1.0;
        for (std::size_t j = 0; j < order; ++j) ff *= static_cast<double>(m - j);
        const double b = weights.beta(m);
        c[m] = ff * wpow / (b * b);
        wpow *= wbar;
    }
    return KernelVector{w, order, TruncatedSeries(std::move(c))};
}

Complex inner_product(const TruncatedSeries& f, const TruncatedSeries& g, const WeightSequence& weights) {
    const std::size_t n = std::min({f.trunc_degree(), g.trunc_degree(), weights.max_degree()});
    Complex acc{0.0};
    for (std::size_t k = 0; k <= n; ++k) {
        const double b = weights.beta(k);
        acc += f.coeff(k) * std::conj(g.coeff(k)) * (b * b);
    }
    return acc;
}

double reproducing_check(const TruncatedSeries& f, Complex w, std::size_t order, const WeightSequence& weights) {
    const std::size_t N = std::min(f.trunc_degree(), weights.max_degree());
    const KernelVector kv = kernel(w, order, weights, N);
    TruncatedSeries df = f;
    for (std::size_t j = 0; j < order; ++j) df = derivative(df);
    const Complex paired = inner_product(f, kv.coeffs, weights);
    return std::abs(paired - evaluate(df, w));
}

std::vector<double> norm_profile(const TruncatedSeries& f, const WeightSequence& weights) {
    const std::size_t n = std::min(f.trunc_degree(), weights.max_degree());
    std::vector<double> profile(n + 1);
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double b = weights.beta(k);
        acc += std::norm(f.coeff(k)) * (b * b);
        profile[k] = acc;
    }
    return profile;
}

double profile_tail_slope(const std::vector<double>& profile) {
    if (profile.size() < 2) return 0.0;
    const std::size_t len = profile.size();
    const std::size_t start = len - std::max<std::size_t>(len / 4, 1);
    double acc = 0.0;
    for (std::size_t i = start; i < len; ++i) acc += profile[i] - profile[i - 1];
    return acc / static_cast<double>(len - start);
}

bool divergence_flag(const std::vector<double>& profile, double slope_threshold) {
    return profile_tail_slope(profile) > slope_threshold;
}

}  // namespace wco
