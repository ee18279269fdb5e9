#include "wco/koenigs.hpp"

#include <cmath>

namespace wco {

namespace {

constexpr double kCoeffTol = 1e-12;

void check_multiplier(Complex lambda) {
    if (std::abs(lambda) < 1e-14)
        throw Error(Errc::DerivativeZero, "phi'(w0) vanishes; no Koenigs eigenfunction");
    if (std::abs(lambda) >= 1.0 - 1e-12)
        throw Error(Errc::DerivativeNotContractive,
                    "|phi'(w0)| = " + std::to_string(std::abs(lambda)) + " is not < 1");
}

// Core iteration for a symbol already fixing 0: kappa_{k+1} = (kappa_k o phi) / lambda.
// Preserves kappa'(0) = 1 exactly, so the limit carries the derivative
// normalization for free.
struct CenteredKoenigs {
    TruncatedSeries kappa;
    int iterations;
};

CenteredKoenigs iterate_centered(const TruncatedSeries& phi_centered, Complex lambda, int max_iter) {
    const std::size_t N = phi_centered.trunc_degree();
    TruncatedSeries kappa = TruncatedSeries::identity(N);
    for (int k = 1; k <= max_iter; ++k) {
        TruncatedSeries next = compose(kappa, phi_centered);
        next *= 1.0 / lambda;
        const double diff = max_coeff_distance(next, kappa);
        kappa = std::move(next);
        if (diff < kCoeffTol) return CenteredKoenigs{std::move(kappa), k};
    }
    throw Error(Errc::NoConvergence,
                "Koenigs iteration still moving after " + std::to_string(max_iter) + " steps");
}

}  // namespace

KoenigsResult koenigs_iterate(const MobiusMap& phi, const FixedPointInfo& fp, std::size_t N,
                              int max_iter) {
    if (!fp.interior)
        throw std::invalid_argument("koenigs_iterate: fixed point must be interior");
    const Complex lambda = fp.derivative_at_w0;
    check_multiplier(lambda);

    if (std::abs(fp.w0) < 1e-14) {
        const TruncatedSeries phi_series = to_series(phi, N);
        const auto centered = iterate_centered(phi_series, lambda, max_iter);
        const double res =
            max_coeff_distance(compose(centered.kappa, phi_series), lambda * centered.kappa);
        return KoenigsResult{centered.kappa, lambda, fp.w0, centered.iterations, res};
    }

    // Conjugate by the involution sigma = sigma_w0 in exact Moebius algebra:
    // phi_hat = sigma o phi o sigma fixes 0 with the same multiplier.
    const MobiusMap sigma = involutive_automorphism(fp.w0);
    const MobiusMap phi_hat = compose_maps(sigma, compose_maps(phi, sigma));
    const auto centered = iterate_centered(to_series(phi_hat, N), lambda, max_iter);

    // kappa = (kappa_hat o sigma) / sigma'(w0); sigma'(w0) = -1/(1 - |w0|^2).
    const TruncatedSeries sigma_series = to_series(sigma, N);
    const double s = -(1.0 - std::norm(fp.w0));
    TruncatedSeries kappa = compose(centered.kappa, sigma_series);
    kappa *= s;

    const TruncatedSeries phi_series = to_series(phi, N);
    const double res = max_coeff_distance(compose(kappa, phi_series), lambda * kappa);
    return KoenigsResult{std::move(kappa), lambda, fp.w0, centered.iterations, res};
}

KoenigsResult koenigs_iterate(const TruncatedSeries& phi, const FixedPointInfo& fp, int max_iter) {
    if (!fp.interior)
        throw std::invalid_argument("koenigs_iterate: fixed point must be interior");
    const Complex lambda = fp.derivative_at_w0;
    check_multiplier(lambda);
    const std::size_t N = phi.trunc_degree();

    TruncatedSeries phi_centered = phi;
    TruncatedSeries sigma_series = TruncatedSeries::identity(N);
    const bool recenter = std::abs(fp.w0) >= 1e-14;
    if (recenter) {
        sigma_series = to_series(involutive_automorphism(fp.w0), N);
        phi_centered = compose(sigma_series, compose(phi, sigma_series));
    }

    const auto centered = iterate_centered(phi_centered, lambda, max_iter);
    TruncatedSeries kappa = centered.kappa;
    if (recenter) {
        kappa = compose(centered.kappa, sigma_series);
        kappa *= -(1.0 - std::norm(fp.w0));
    }
    const double res = max_coeff_distance(compose(kappa, phi), lambda * kappa);
    return KoenigsResult{std::move(kappa), lambda, fp.w0, centered.iterations, res};
}

TruncatedSeries phi_from_koenigs(const TruncatedSeries& kappa, Complex lambda) {
    if (kappa.coeff(0) != Complex{0.0} || kappa.coeff(1) == Complex{0.0})
        throw Error(Errc::NotInvertible, "phi_from_koenigs needs kappa(0) = 0, kappa'(0) != 0");
    if (std::abs(lambda) < 1e-14) throw Error(Errc::DerivativeZero, "lambda must be nonzero");
    if (std::abs(lambda) >= 1.0 - 1e-12)
        throw Error(Errc::DerivativeNotContractive, "lambda must satisfy |lambda| < 1");
    return compose(revert(kappa), lambda * kappa);
}

std::vector<PowerMembership> power_membership_report(const KoenigsResult& kr,
                                                     const WeightSequence& weights, int n_max) {
    if (n_max < 1) throw std::invalid_argument("power_membership_report: n_max must be >= 1");
    std::vector<PowerMembership> report;
    report.reserve(static_cast<std::size_t>(n_max));
    TruncatedSeries power = kr.kappa_series;
    for (int n = 1; n <= n_max; ++n) {
        if (n > 1) power = power * kr.kappa_series;
        const std::vector<double> profile = norm_profile(power, weights);
        const double slope = profile_tail_slope(profile);
        report.push_back(PowerMembership{n, slope, divergence_flag(profile)});
    }
    return report;
}

double obstruction_value(Complex w0, const WeightSequence& weights, std::size_t N) {
    if (std::abs(w0) >= 1.0)
        throw Error(Errc::BasePointOutsideDisk, "obstruction base point must lie in the disk");
    const KernelVector k0 = kernel(w0, 0, weights, N);
    const KernelVector k1 = kernel(w0, 1, weights, N);
    const double norm0 = std::sqrt(std::abs(inner_product(k0.coeffs, k0.coeffs, weights)));
    const double norm1 = std::sqrt(std::abs(inner_product(k1.coeffs, k1.coeffs, weights)));
    return std::abs(evaluate(k1.coeffs, w0)) / (norm0 * norm1);
}

ConsistencyCheck consistency_check(const KoenigsResult& kr, const WeightSequence& weights) {
    const std::vector<double> profile = norm_profile(kr.kappa_series, weights);
    if (divergence_flag(profile))
        throw Error(Errc::DivergentKoenigsNorm,
                    "truncated norm of kappa looks divergent; unit normalization undefined");
    const double norm = std::sqrt(profile.back());
    const double lhs = std::abs(evaluate(kr.kappa_series, Complex{0.0})) / norm;
    const double rhs = obstruction_value(kr.w0, weights, std::min(kr.kappa_series.trunc_degree(),
                                                                  weights.max_degree()));
    return ConsistencyCheck{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace wco
