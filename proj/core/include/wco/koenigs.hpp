#pragma once

#include <cstddef>
#include <vector>

#include "wco/maps.hpp"
#include "wco/space.hpp"

namespace wco {

/// Solution of the Schroeder equation kappa o phi = lambda kappa at an
/// interior fixed point w0, lambda = phi'(w0).  The stored series lives in
/// the original variable, normalized so kappa(w0) = 0 and kappa'(w0) = 1
/// (derivative normalization is truncation-stable, unlike unit norm).
struct KoenigsResult {
    TruncatedSeries kappa_series;
    Complex lambda;
    Complex w0;
    int iterations;
    double schroeder_residual;  // max coefficient deviation of kappa o phi - lambda kappa
};

/// Conjugates the fixed point to 0 with the involution sigma_w0, iterates
/// kappa_k = phi^(ok) / lambda^k in series form until successive coefficient
/// vectors differ by < 1e-12, and maps the limit back.  Requires an interior
/// fixed point and 0 < |lambda| < 1.
KoenigsResult koenigs_iterate(const MobiusMap& phi, const FixedPointInfo& fp, std::size_t N,
                              int max_iter = 200);

/// Same iteration for a general series symbol.  For w0 != 0 the conjugation
/// is itself carried out in truncated-series arithmetic, so the result
/// inherits the composition truncation caveat; the Schroeder residual
/// reports the achieved fidelity either way.
KoenigsResult koenigs_iterate(const TruncatedSeries& phi, const FixedPointInfo& fp,
                              int max_iter = 200);

/// phi = revert(kappa) o (lambda kappa): the self-map whose Koenigs
/// eigenfunction is the given kappa.  Requires kappa(0) = 0, kappa'(0) != 0
/// and 0 < |lambda| < 1.
TruncatedSeries phi_from_koenigs(const TruncatedSeries& kappa, Complex lambda);

struct PowerMembership {
    int power;
    double norm_profile_tail_slope;
    bool divergence_flag;
};

/// Norm-profile divergence heuristic for each power kappa^n, n = 1..n_max.
/// A set flag reports growth at truncation scale, not a membership proof.
std::vector<PowerMembership> power_membership_report(const KoenigsResult& kr,
                                                     const WeightSequence& weights, int n_max);

/// |K_w0^(1)(w0)| / (||K_w0|| * ||K_w0^(1)||) from truncated kernel sums.
/// Any Koenigs eigenfunction of a symbol that is standard-type J-symmetric
/// must satisfy |kappa(0)| equal to this value once ||kappa|| = 1.
double obstruction_value(Complex w0, const WeightSequence& weights, std::size_t N);

struct ConsistencyCheck {
    double lhs;  // |kappa(0)| with kappa scaled to unit truncated norm
    double rhs;  // obstruction_value at w0
    double residual;
};

/// Compares the two sides of the obstruction identity.  A large residual
/// certifies, at truncation fidelity, that no conjugation J with
/// J(1) proportional to K_w0 makes the composition operator J-symmetric.
/// Refuses (DivergentKoenigsNorm) when the truncated norm looks divergent,
/// because the unit normalization would be meaningless.
ConsistencyCheck consistency_check(const KoenigsResult& kr, const WeightSequence& weights);

}  // namespace wco
