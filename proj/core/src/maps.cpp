#include "wco/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace wco {

namespace {

constexpr double kDegenerateDet = 1e-14;
constexpr double kSelfMapSlack = 1e-12;

}  // namespace

MobiusMap MobiusMap::normalized() const {
    const std::array<Complex, 4> coeffs{a, b, c, d};
    std::size_t arg = 0;
    double best = std::abs(coeffs[0]);
    for (std::size_t i = 1; i < 4; ++i) {
        const double m = std::abs(coeffs[i]);
        if (m > best) {
            best = m;
            arg = i;
        }
    }
    if (best == 0.0) return *this;
    const Complex s = coeffs[arg];
    return MobiusMap{a / s, b / s, c / s, d / s};
}

double map_distance(const MobiusMap& f, const MobiusMap& g) {
    const MobiusMap fn = f.normalized();
    const MobiusMap gn = g.normalized();
    return std::max({std::abs(fn.a - gn.a), std::abs(fn.b - gn.b), std::abs(fn.c - gn.c),
                     std::abs(fn.d - gn.d)});
}

MobiusMap involutive_automorphism(Complex a) {
    if (std::abs(a) >= 1.0)
        throw Error(Errc::ParameterOutsideDisk, "involutive automorphism requires |a| < 1");
    return MobiusMap{-1.0, a, -std::conj(a), 1.0};
}

MobiusMap compose_maps(const MobiusMap& f, const MobiusMap& g) {
    const MobiusMap h{f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
                      f.c * g.b + f.d * g.d};
    if (std::abs(h.normalized().det()) <= kDegenerateDet)
        throw Error(Errc::DegenerateComposition, "composed map has collapsed determinant");
    return h;
}

SelfMapCheck self_map_check(const MobiusMap& m, int samples) {
    if (samples < 16) throw std::invalid_argument("self_map_check: need at least 16 samples");
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / samples;
        const double mod = std::abs(m.apply(std::polar(1.0, theta)));
        if (!std::isfinite(mod)) return SelfMapCheck{false, std::numeric_limits<double>::infinity()};
        worst = std::max(worst, mod);
    }
    return SelfMapCheck{worst <= 1.0 + kSelfMapSlack, worst};
}

MobiusMap ppf_map(const PPFParams& p) {
    // a0 + a1 z / (1 - a0 z) = (a0 + (a1 - a0^2) z) / (1 - a0 z)
    const MobiusMap m{p.a1 - p.a0 * p.a0, p.a0, -p.a0, 1.0};
    const SelfMapCheck check = self_map_check(m);
    if (!check.ok)
        throw Error(Errc::NotSelfMap, "phi leaves the disk, boundary modulus " +
                                          std::to_string(check.max_boundary_modulus));
    return m;
}

FixedPointInfo fixed_point_in_disk(const MobiusMap& map) {
    const MobiusMap m = map.normalized();
    const auto finish = [&m](Complex w, bool interior) {
        return FixedPointInfo{w, m.derivative(w), interior};
    };

    // fixed points: c w^2 + (d - a) w - b = 0
    const Complex A = m.c;
    const Complex B = m.d - m.a;
    const Complex C = -m.b;

    if (std::abs(A) > kDegenerateDet) {
        const Complex disc = B * B - 4.0 * A * C;
        if (std::abs(disc) >= 1e-10) {
            // cancellation-free pairing: q collects B and the aligned root of disc
            Complex sq = std::sqrt(disc);
            if (std::real(std::conj(B) * sq) < 0.0) sq = -sq;
            const Complex q = -0.5 * (B + sq);
            const Complex r1 = q / A;
            const Complex r2 = (std::abs(q) > 0.0) ? C / q : r1;
            const Complex w = (std::abs(r2) <= std::abs(r1)) ? r2 : r1;
            if (std::abs(w) < 1.0) return finish(w, true);
            const Complex other = (std::abs(r2) <= std::abs(r1)) ? r1 : r2;
            if (std::abs(other) < 1.0) return finish(other, true);
        } else {
            const Complex w = -B / (2.0 * A);  // near-double root
            if (std::abs(w) < 1.0) return finish(w, true);
        }
    } else if (std::abs(B) > kDegenerateDet) {
        const Complex w = -C / B;
        if (std::abs(w) < 1.0) return finish(w, true);
    } else if (std::abs(C) <= kDegenerateDet) {
        return finish(Complex{0.0}, true);  // identity map: everything is fixed
    }

    // No interior fixed point: Denjoy-Wolff iteration toward the boundary.
    Complex z{0.0};
    for (int step = 0; step < 100000; ++step) {
        const Complex next = m.apply(z);
        if (std::abs(next - z) < 1e-13) return finish(next, false);
        z = next;
    }
    throw Error(Errc::NoFixedPointFound, "Denjoy-Wolff iteration did not converge in 1e5 steps");
}

TruncatedSeries to_series(const MobiusMap& m, std::size_t N) {
    if (std::abs(m.c) <= kDegenerateDet * std::max(std::abs(m.a), std::abs(m.d))) {
        // affine: (a z + b) / d
        std::vector<Complex> c(N + 1, Complex{0.0});
        c[0] = m.b / m.d;
        if (N >= 1) c[1] = m.a / m.d;
        return TruncatedSeries(std::move(c));
    }
    const Complex pole = -m.d / m.c;
    if (std::abs(pole) <= 1.0)
        throw Error(Errc::PoleInsideDisk, "pole at modulus " + std::to_string(std::abs(pole)));
    // (a z + b) / (c z + d) = (a z + b) / d * 1 / (1 - (-c/d) z)
    const TruncatedSeries geo = TruncatedSeries::geometric(1.0 / m.d, -m.c / m.d, N);
    TruncatedSeries num = TruncatedSeries::constant(m.b, N);
    if (N >= 1) num += TruncatedSeries::monomial(1, m.a, N);
    return num * geo;
}

FixedPointInfo series_fixed_point(const TruncatedSeries& phi) {
    Complex z{0.0};
    for (int step = 0; step < 100000; ++step) {
        const Complex next = evaluate(phi, z);
        if (std::abs(next - z) < 1e-13) {
            const Complex w = next;
            return FixedPointInfo{w, evaluate(derivative(phi), w), std::abs(w) < 1.0};
        }
        z = next;
        if (!(std::abs(z) < 2.0))
            throw Error(Errc::NoFixedPointFound, "iteration left the disk; not a self-map?");
    }
    throw Error(Errc::NoFixedPointFound, "fixed-point iteration did not converge in 1e5 steps");
}

TruncatedSeries ppf_phi_series(const PPFParams& p, std::size_t N) {
    std::vector<Complex> c(N + 1, Complex{0.0});
    if (c.empty()) throw std::invalid_argument("ppf_phi_series: degree overflow");
    c[0] = p.a0;
    Complex t = p.a1;
    for (std::size_t n = 1; n <= N; ++n) {
        c[n] = t;
        t *= p.a0;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries ppf_psi_series(const PPFParams& p, std::size_t N) {
    std::vector<Complex> c(N + 1, Complex{0.0});
    if (c.empty()) throw std::invalid_argument("ppf_psi_series: degree overflow");
    Complex t = p.b;
    for (std::size_t n = 0; n <= N; ++n) {
        c[n] = t;
        t *= p.a0 * ((p.kappa + static_cast<double>(n)) / (static_cast<double>(n) + 1.0));
    }
    return TruncatedSeries(std::move(c));
}

Complex ppf_phi_eval(const PPFParams& p, Complex z) { return p.a0 + p.a1 * z / (1.0 - p.a0 * z); }

Complex ppf_psi_eval(const PPFParams& p, Complex z) {
    return p.b * std::pow(1.0 - p.a0 * z, Complex{-p.kappa});
}

}  // namespace wco
