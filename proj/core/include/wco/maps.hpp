#pragma once

#include <cstddef>

#include "wco/series.hpp"

namespace wco {

/// Linear-fractional map z -> (a z + b) / (c z + d), ad - bc != 0.
/// Coefficients are projective: maps equal up to a common scalar are the
/// same map, so comparisons go through normalized().
struct MobiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
    Complex det() const { return a * d - b * c; }
    /// Exact derivative (ad - bc) / (cz + d)^2; projective-invariant.
    Complex derivative(Complex z) const {
        const Complex q = c * z + d;
        return det() / (q * q);
    }

    MobiusMap inverse() const { return MobiusMap{d, -b, -c, a}; }
    /// Scales so the largest-modulus coefficient becomes exactly 1.
    MobiusMap normalized() const;

    static MobiusMap identity() { return MobiusMap{}; }
    static MobiusMap scaling(Complex s) { return MobiusMap{s, 0.0, 0.0, 1.0}; }
};

/// max coefficient deviation between the normalized forms; 0 iff the maps
/// are projectively equal (up to the normalization's tie-breaking).
double map_distance(const MobiusMap& f, const MobiusMap& g);

/// The involution z -> (a - z) / (1 - conj(a) z); requires |a| < 1.
MobiusMap involutive_automorphism(Complex a);

/// Exact composition f(g(z)) via the 2x2 coefficient-matrix product.
MobiusMap compose_maps(const MobiusMap& f, const MobiusMap& g);

/// Parameters of the symbol pair psi(z) = b / (1 - a0 z)^kappa,
/// phi(z) = a0 + a1 z / (1 - a0 z).
struct PPFParams {
    Complex a0{0.0};
    Complex a1{0.0};
    Complex b{1.0};
    double kappa{1.0};
};

struct SelfMapCheck {
    bool ok;
    double max_boundary_modulus;
};

/// Samples |phi| at equispaced boundary points; by the maximum principle this
/// bounds the map on the whole disk up to sampling density.  ok iff the
/// maximum stays <= 1 + 1e-12.  Requires samples >= 16.
SelfMapCheck self_map_check(const MobiusMap& m, int samples = 4096);

/// Moebius form of the phi in PPFParams: (a0 + (a1 - a0^2) z) / (1 - a0 z).
/// Throws NotSelfMap when the boundary sweep rejects it.
MobiusMap ppf_map(const PPFParams& p);

struct FixedPointInfo {
    Complex w0;
    Complex derivative_at_w0;
    bool interior;
};

/// Solves c w^2 + (d - a) w - b = 0 with stable root selection and returns
/// the root inside the disk if there is one; otherwise runs Denjoy-Wolff
/// iteration from 0 and reports the boundary limit with interior = false.
FixedPointInfo fixed_point_in_disk(const MobiusMap& m);

/// Taylor coefficients through degree N, exact to machine precision.
/// Requires the pole -d/c to lie strictly outside the closed disk.
TruncatedSeries to_series(const MobiusMap& m, std::size_t N);

/// Fixed point of a general series symbol by forward iteration from 0
/// (finds the attracting point of a self-map); the derivative comes from
/// the series derivative.  NoFixedPointFound after 1e5 non-converging steps.
FixedPointInfo series_fixed_point(const TruncatedSeries& phi);

/// Exact Taylor coefficients of the PPF phi: [a0, a1, a1 a0, a1 a0^2, ...].
/// No self-map requirement, so classification round-trips can use it.
TruncatedSeries ppf_phi_series(const PPFParams& p, std::size_t N);

/// Exact Taylor coefficients of psi = b (1 - a0 z)^(-kappa) via the
/// recurrence c_{n+1} = c_n a0 (kappa + n) / (n + 1).
TruncatedSeries ppf_psi_series(const PPFParams& p, std::size_t N);

/// Closed-form evaluations used by grid identities (no truncation error).
Complex ppf_phi_eval(const PPFParams& p, Complex z);
Complex ppf_psi_eval(const PPFParams& p, Complex z);

}  // namespace wco
