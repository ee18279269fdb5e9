#include <doctest.h>

#include <cmath>

#include "wco/space.hpp"

using wco::Complex;
using wco::TruncatedSeries;
using wco::WeightSequence;

TEST_SUITE("space") {

TEST_CASE("beta_kappa specializations") {
    // kappa = 1 is the classical space: (1 - wz)^-1 expands with unit
    // coefficients, so every weight is 1.
    const WeightSequence b1 = WeightSequence::beta_kappa(1.0, 16);
    for (std::size_t n = 0; n <= 16; ++n) CHECK(std::abs(b1.beta(n) - 1.0) < 1e-14);

    // kappa = 2: (1-x)^-2 = sum (n+1) x^n, so beta(n)^2 = 1/(n+1).
    const WeightSequence b2 = WeightSequence::beta_kappa(2.0, 16);
    for (std::size_t n = 0; n <= 16; ++n)
        CHECK(std::abs(b2.beta(n) * b2.beta(n) - 1.0 / (n + 1.0)) < 1e-14);

    CHECK(b2.beta(0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(WeightSequence::beta_kappa(0.5, 4), std::invalid_argument);
}

TEST_CASE("weights satisfy the kernel-matching identity") {
    for (const double kappa : {1.0, 1.5, 2.0, 3.0, 4.5}) {
        const WeightSequence w = WeightSequence::beta_kappa(kappa, 48);
        for (std::size_t n = 0; n <= 48; ++n) {
            const double b2 = w.beta(n) * w.beta(n);
            CHECK(std::abs(b2 * wco::binom_kappa(kappa, n) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("inner products") {
    const WeightSequence hardy = WeightSequence::hardy(8);
    const TruncatedSeries z = TruncatedSeries::identity(8);
    CHECK(inner_product(z, z, hardy) == Complex{1.0});

    const TruncatedSeries z3 = TruncatedSeries::monomial(3, 1.0, 8);
    CHECK(inner_product(z3, z, hardy) == Complex{0.0});

    const WeightSequence b2 = WeightSequence::beta_kappa(2.0, 8);
    CHECK(std::abs(inner_product(z, z, b2) - Complex{0.5}) < 1e-15);
}

TEST_CASE("inner product is conjugate symmetric, exactly") {
    const TruncatedSeries f({Complex{1.0, 2.0}, Complex{-0.3, 0.4}, Complex{0.0, -1.0}});
    const TruncatedSeries g({Complex{0.5, -0.5}, Complex{2.0, 0.1}, Complex{0.7, 0.7}});
    const WeightSequence w = WeightSequence::beta_kappa(3.0, 2);
    CHECK(inner_product(f, g, w) == std::conj(inner_product(g, f, w)));
}

TEST_CASE("kernel vectors") {
    const WeightSequence b2 = WeightSequence::beta_kappa(2.0, 12);
    const wco::KernelVector k0 = kernel(Complex{0.0}, 0, b2, 12);
    CHECK(k0.coeffs.coeff(0) == Complex{1.0});  // 1/beta(0)^2
    for (std::size_t n = 1; n <= 12; ++n) CHECK(k0.coeffs.coeff(n) == Complex{0.0});

    // K_0^(1) in the kappa space is kappa * z since 1/beta(1)^2 = kappa.
    for (const double kappa : {1.0, 2.5, 3.0}) {
        const WeightSequence w = WeightSequence::beta_kappa(kappa, 6);
        const wco::KernelVector k1 = kernel(Complex{0.0}, 1, w, 6);
        CHECK(std::abs(k1.coeffs.coeff(1) - kappa) < 1e-12);
        CHECK(k1.coeffs.coeff(0) == Complex{0.0});
        CHECK(k1.coeffs.coeff(2) == Complex{0.0});
    }

    // the evaluation property: <z^3, K_0.5> = 0.5^3
    const WeightSequence hardy = WeightSequence::hardy(12);
    const TruncatedSeries z3 = TruncatedSeries::monomial(3, 1.0, 12);
    const wco::KernelVector kw = kernel(Complex{0.5}, 0, hardy, 12);
    CHECK(std::abs(inner_product(z3, kw.coeffs, hardy) - Complex{0.125}) < 1e-15);

    CHECK_THROWS_AS(kernel(Complex{1.2}, 0, hardy, 12), wco::Error);
}

TEST_CASE("kernel coefficients match the binomial expansion") {
    // independent route: ratio recurrence for (1 - conj(w) z)^(-kappa)
    const Complex w{0.3, -0.4};
    for (const double kappa : {1.0, 1.5, 3.0}) {
        const WeightSequence ws = WeightSequence::beta_kappa(kappa, 24);
        const wco::KernelVector kv = kernel(w, 0, ws, 24);
        Complex expect{1.0};
        for (std::size_t n = 0; n <= 24; ++n) {
            CHECK(std::abs(kv.coeffs.coeff(n) - expect) <= 1e-12 * std::abs(expect));
            expect *= std::conj(w) * ((kappa + double(n)) / (double(n) + 1.0));
        }
    }
}

TEST_CASE("reproducing property for polynomials") {
    const WeightSequence b3 = WeightSequence::beta_kappa(3.0, 16);
    const TruncatedSeries f({1.0, Complex{0.5, 0.5}, -2.0, 0.25, Complex{0.0, 1.0}});
    for (const Complex w : {Complex{0.0}, Complex{0.5}, Complex{-0.3, 0.6}}) {
        CHECK(wco::reproducing_check(f.with_degree(16), w, 0, b3) < 1e-13);
        CHECK(wco::reproducing_check(f.with_degree(16), w, 1, b3) < 1e-12);
    }
    CHECK(wco::reproducing_check(TruncatedSeries::constant(1.0, 8), Complex{0.7, 0.1}, 0,
                                 WeightSequence::hardy(8)) == 0.0);
}

TEST_CASE("pairing a truncation against the full function shows the tail") {
    // f_N = truncation of 1/(1-z): the kernel pairing reproduces the
    // truncated value exactly, and misses the true value 1/(1-w) by the
    // dropped geometric tail sum_{n>N} w^n = w^(N+1)/(1-w).
    const std::size_t N = 40;
    const double w = 0.9;
    const WeightSequence hardy = WeightSequence::hardy(N);
    const TruncatedSeries f = TruncatedSeries::geometric(1.0, 1.0, N);
    CHECK(wco::reproducing_check(f, w, 0, hardy) < 1e-12);

    const wco::KernelVector kw = kernel(Complex{w}, 0, hardy, N);
    const double paired = inner_product(f, kw.coeffs, hardy).real();
    const double tail = std::pow(w, double(N + 1)) / (1.0 - w);
    CHECK(std::abs((1.0 / (1.0 - w) - paired) - tail) < 1e-9);
    CHECK(tail > 1e-3);  // the gap is genuinely visible at this truncation
}

TEST_CASE("norm profiles") {
    const std::size_t N = 40;
    const WeightSequence hardy = WeightSequence::hardy(N);

    const std::vector<double> pz = norm_profile(TruncatedSeries::identity(N), hardy);
    CHECK(pz[0] == 0.0);
    for (std::size_t m = 1; m <= N; ++m) CHECK(pz[m] == 1.0);

    // 2z/(1-z): coefficients 2 from index 1, so P_m = 4m and the divergence
    // heuristic must fire with slope exactly 4.
    const TruncatedSeries big =
        TruncatedSeries::identity(N) * TruncatedSeries::geometric(2.0, 1.0, N);
    const std::vector<double> pbig = norm_profile(big, hardy);
    for (std::size_t m = 1; m <= N; ++m) CHECK(pbig[m] == 4.0 * m);
    CHECK(wco::profile_tail_slope(pbig) == 4.0);
    CHECK(wco::divergence_flag(pbig));

    // z/(1 - z/2): squared coefficients 4^(1-n) sum to 4/3
    const TruncatedSeries small =
        TruncatedSeries::identity(N) * TruncatedSeries::geometric(1.0, 0.5, N);
    const std::vector<double> psmall = norm_profile(small, hardy);
    CHECK(std::abs(psmall.back() - 4.0 / 3.0) < 1e-12);
    CHECK_FALSE(wco::divergence_flag(psmall));
    for (std::size_t m = 1; m <= N; ++m) CHECK(psmall[m] >= psmall[m - 1]);
}

}  // TEST_SUITE
