#include <doctest.h>

#include <cmath>
#include <random>

#include "wco/series.hpp"

using wco::Complex;
using wco::TruncatedSeries;

namespace {

TruncatedSeries from(std::initializer_list<Complex> coeffs) {
    return TruncatedSeries(std::vector<Complex>(coeffs));
}

double dist(const TruncatedSeries& a, const TruncatedSeries& b) {
    return wco::max_coeff_distance(a, b);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("addition is coefficientwise at the smaller degree") {
    const TruncatedSeries one_plus_z = from({1.0, 1.0});
    const TruncatedSeries z = from({0.0, 1.0});
    const TruncatedSeries sum = one_plus_z + z;
    CHECK(sum.trunc_degree() == 1);
    CHECK(sum.coeff(0) == Complex{1.0});
    CHECK(sum.coeff(1) == Complex{2.0});

    const TruncatedSeries f = from({0.5, -2.0, 3.0});
    CHECK(dist(f + TruncatedSeries::zero(2), f) == 0.0);

    const TruncatedSeries two = from({1.0, -1.0}) + from({1.0, 1.0});
    CHECK(two.coeff(0) == Complex{2.0});
    CHECK(two.coeff(1) == Complex{0.0});
}

TEST_CASE("binary results never claim more precision than the inputs") {
    const TruncatedSeries lo = TruncatedSeries::constant(0.5, 3);
    const TruncatedSeries hi = TruncatedSeries::constant(1.0, 9);
    CHECK((lo + hi).trunc_degree() == 3);
    CHECK((hi * lo).trunc_degree() == 3);
    CHECK(compose(hi, lo).trunc_degree() == 3);
    CHECK(compose(lo, TruncatedSeries::identity(9)).trunc_degree() == 3);
}

TEST_CASE("Cauchy product") {
    const TruncatedSeries a = from({1.0, 1.0, 0.0});   // 1 + z at degree 2
    const TruncatedSeries b = from({1.0, -1.0, 0.0});  // 1 - z
    const TruncatedSeries p = a * b;
    CHECK(p.coeff(0) == Complex{1.0});
    CHECK(p.coeff(1) == Complex{0.0});
    CHECK(p.coeff(2) == Complex{-1.0});

    const TruncatedSeries f = from({2.0, Complex{0.0, 1.0}, -0.25});
    CHECK(dist(f * TruncatedSeries::constant(1.0, 2), f) == 0.0);

    // geometric(1/2)^2: convolving 2^-n with itself gives (n+1) 2^-n:
    // c0 = 1, c1 = 1/2 + 1/2 = 1, c2 = 1/4 + 1/4 + 1/4 = 3/4,
    // c3 = 1/8 + 1/8 + 1/8 + 1/8 = 1/2.
    const TruncatedSeries g = TruncatedSeries::geometric(1.0, 0.5, 8);
    const TruncatedSeries g2 = g * g;
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(std::abs(g2.coeff(n) - (n + 1.0) * std::pow(0.5, double(n))) < 1e-15);
}

TEST_CASE("multiplication is commutative and associative at rounding scale") {
    const TruncatedSeries f = from({1.0, Complex{0.2, 0.4}, -0.7, 0.3, Complex{0.0, -0.9}});
    const TruncatedSeries g = from({Complex{0.0, 1.0}, 2.0, 0.1, -0.6, 0.25});
    const TruncatedSeries h = from({0.5, -0.5, Complex{0.3, 0.3}, 1.1, 0.0});
    double scale = 0.0;
    for (std::size_t k = 0; k <= 4; ++k)
        scale = std::max({scale, std::abs(f.coeff(k)), std::abs(g.coeff(k)), std::abs(h.coeff(k))});
    CHECK(dist(f * g, g * f) <= 1e-13 * scale);
    CHECK(dist((f * g) * h, f * (g * h)) <= 1e-13 * scale * scale);
}

TEST_CASE("composition: identity laws hold exactly") {
    const TruncatedSeries f = from({0.3, -1.0, Complex{0.0, 2.0}, 0.8, -0.1});
    const TruncatedSeries z = TruncatedSeries::identity(4);
    CHECK(dist(compose(f, z), f) == 0.0);
    CHECK(dist(compose(z, f * TruncatedSeries::constant(0.5, 4)), 0.5 * f) == 0.0);
}

TEST_CASE("composition of monomials") {
    const TruncatedSeries z2 = TruncatedSeries::monomial(2, 1.0, 4);
    const TruncatedSeries az = TruncatedSeries::monomial(1, Complex{0.3, 0.1}, 4);
    const TruncatedSeries c = compose(z2, az);
    const Complex a2 = Complex{0.3, 0.1} * Complex{0.3, 0.1};
    CHECK(std::abs(c.coeff(2) - a2) < 1e-16);
    for (std::size_t k : {0u, 1u, 3u, 4u}) CHECK(c.coeff(k) == Complex{0.0});
}

TEST_CASE("composition reproduces the halved singular symbol") {
    // outer 2z/(1-z), inner z/2 / (1 - z/2): the composite collapses to
    // z/(1-z), i.e. half the outer coefficients, all equal 1.
    const std::size_t N = 8;
    const TruncatedSeries outer =
        TruncatedSeries::identity(N) * TruncatedSeries::geometric(2.0, 1.0, N);
    const TruncatedSeries inner =
        TruncatedSeries::identity(N) * TruncatedSeries::geometric(0.5, 0.5, N);
    const TruncatedSeries got = compose(outer, inner);
    CHECK(std::abs(got.coeff(0)) < 1e-15);
    for (std::size_t n = 1; n <= N; ++n) CHECK(std::abs(got.coeff(n) - 1.0) < 1e-13);
}

TEST_CASE("composition rejects an inner constant outside the disk") {
    const TruncatedSeries f = from({1.0, 1.0, 1.0});
    const TruncatedSeries bad = from({1.5, 1.0, 0.0});
    CHECK_THROWS_AS(compose(f, bad), wco::Error);
    try {
        compose(f, bad);
    } catch (const wco::Error& e) {
        CHECK(e.code() == wco::Errc::InnerConstantTooLarge);
    }
}

TEST_CASE("reversion") {
    const std::size_t N = 10;
    CHECK(dist(revert(TruncatedSeries::identity(N)), TruncatedSeries::identity(N)) == 0.0);

    // revert(2z) = z/2
    const TruncatedSeries half = revert(TruncatedSeries::monomial(1, 2.0, N));
    CHECK(std::abs(half.coeff(1) - 0.5) < 1e-15);

    // revert(z/(1-z)) = z/(1+z), coefficients 0, 1, -1, 1, -1, ...
    const TruncatedSeries s = TruncatedSeries::identity(N) * TruncatedSeries::geometric(1.0, 1.0, N);
    const TruncatedSeries r = revert(s);
    for (std::size_t n = 1; n <= N; ++n)
        CHECK(std::abs(r.coeff(n) - ((n % 2 == 1) ? 1.0 : -1.0)) < 1e-12);
    CHECK(dist(compose(s, r), TruncatedSeries::identity(N)) < 1e-10);
    CHECK(dist(compose(r, s), TruncatedSeries::identity(N)) < 1e-10);
}

TEST_CASE("reversion preconditions") {
    CHECK_THROWS_AS(revert(from({1.0, 1.0})), wco::Error);
    CHECK_THROWS_AS(revert(from({0.0, 0.0, 1.0})), wco::Error);
}

TEST_CASE("reversion round-trips a generic contraction") {
    const TruncatedSeries s = from({0.0, Complex{0.7, 0.2}, -0.3, 0.05, Complex{0.0, 0.4}, 0.1})
                                  .with_degree(12);
    const TruncatedSeries r = revert(s);
    CHECK(dist(compose(s, r), TruncatedSeries::identity(12)) < 1e-10);
    CHECK(dist(compose(r, s), TruncatedSeries::identity(12)) < 1e-10);
}

TEST_CASE("derivative") {
    CHECK(dist(derivative(TruncatedSeries::monomial(2, 1.0, 4)),
               TruncatedSeries::monomial(1, 2.0, 3)) == 0.0);
    CHECK(dist(derivative(TruncatedSeries::constant(7.0, 3)), TruncatedSeries::zero(2)) == 0.0);
    const TruncatedSeries geo = TruncatedSeries::geometric(1.0, 1.0, 6);  // all ones
    const TruncatedSeries d = derivative(geo);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(d.coeff(n) == Complex{double(n + 1)});
}

TEST_CASE("derivative satisfies the product rule") {
    const TruncatedSeries f = from({1.0, Complex{0.5, -0.1}, 0.3, -0.2, 0.9, 0.04});
    const TruncatedSeries g = from({Complex{0.0, 0.8}, 0.4, -1.2, 0.1, 0.6, -0.3});
    const TruncatedSeries lhs = derivative(f * g);
    const TruncatedSeries rhs = derivative(f) * g + f * derivative(g);
    double scale = 0.0;
    for (std::size_t k = 0; k <= 4; ++k) scale = std::max(scale, std::abs(rhs.coeff(k)));
    CHECK(dist(lhs, rhs) <= 1e-12 * scale);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(from({1.0, 1.0}), 0.5) == Complex{1.5});
    CHECK(std::abs(evaluate(TruncatedSeries::monomial(2, 1.0, 2), Complex{0.0, 1.0}) -
                   Complex{-1.0}) < 1e-16);
    // truncated geometric series at 1/2: the dropped tail is 2^-50
    const double got = evaluate(TruncatedSeries::geometric(1.0, 1.0, 50), 0.5).real();
    CHECK(std::abs(got - 2.0) < 1e-14);
}

TEST_CASE("reversion round-trips across generated contractions") {
    // hand-rolled generator: random degree-8 symbols with s(0) = 0, s'(0)
    // of modulus near 1, and a tail small enough that the inverse
    // coefficients stay O(1) (wild tails trade accuracy for magnitude)
    std::mt19937_64 rng(0xC0FFEE);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const TruncatedSeries z = TruncatedSeries::identity(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> c(9, Complex{0.0});
        c[1] = std::polar(0.7 + 0.6 * (u(rng) + 0.5), 2.0 * u(rng));
        for (std::size_t k = 2; k <= 8; ++k) c[k] = Complex{0.3 * u(rng), 0.3 * u(rng)};
        const TruncatedSeries s{std::vector<Complex>(c)};
        const TruncatedSeries r = revert(s);
        CHECK(dist(compose(s, r), z) < 1e-10);
        CHECK(dist(compose(r, s), z) < 1e-10);
    }
}

TEST_CASE("reciprocal multiplies back to one") {
    const TruncatedSeries s = from({2.0, -1.0, Complex{0.3, 0.3}, 0.1}).with_degree(8);
    const TruncatedSeries one = TruncatedSeries::constant(1.0, 8);
    CHECK(dist(s * reciprocal(s), one) < 1e-14);
    CHECK_THROWS_AS(reciprocal(TruncatedSeries::identity(3)), wco::Error);
}

}  // TEST_SUITE
