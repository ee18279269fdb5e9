#include "wco/operators.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace wco {

OperatorMatrix build_matrix(const TruncatedSeries& phi, const TruncatedSeries& psi,
                            const WeightSequence& weights, std::size_t N) {
    if (N == 0) throw std::invalid_argument("build_matrix: N must be positive");
    if (std::abs(phi.coeff(0)) >= 1.0)
        throw Error(Errc::InnerConstantTooLarge, "phi(0) must lie in the open disk");
    if (weights.max_degree() < N - 1)
        throw std::invalid_argument("build_matrix: weights cover degree " +
                                    std::to_string(weights.max_degree()));

    const std::size_t deg = N - 1;
    const TruncatedSeries phi_n = phi.with_degree(deg);
    TruncatedSeries col = psi.with_degree(deg);  // psi * phi^n, starting at n = 0

    Eigen::MatrixXcd entries(N, N);
    for (std::size_t n = 0; n < N; ++n) {
        if (n > 0) col = col * phi_n;
        for (std::size_t m = 0; m < N; ++m)
            entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) =
                col.coeff(m) * (weights.beta(m) / weights.beta(n));
    }
    return OperatorMatrix(std::move(entries), weights, phi, psi);
}

std::vector<Complex> conjugate_coefficients(std::span<const Complex> v) {
    std::vector<Complex> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](Complex c) { return std::conj(c); });
    return out;
}

// W = J W* J  <=>  M = M^T in the basis e_n = z^n / beta(n):
// J fixes every e_n (J z^n = z^n, beta real) and <Jx, Jy> = <y, x>, so
//   <J W* J e_n, e_m> = <J W* e_n, J e_m> = <e_m, W* e_n> = <W e_m, e_n> = M(n, m)
// while <W e_n, e_m> = M(m, n).  Both sides are stored entries, hence exact.
double transpose_symmetry_residual(const OperatorMatrix& M) {
    const auto& E = M.entries();
    double worst = 0.0;
    for (Eigen::Index m = 0; m < E.rows(); ++m)
        for (Eigen::Index n = 0; n < m; ++n)
            worst = std::max(worst, std::abs(E(m, n) - E(n, m)));
    return worst;
}

double hermitian_residual(const OperatorMatrix& M) {
    const auto& E = M.entries();
    double worst = 0.0;
    for (Eigen::Index m = 0; m < E.rows(); ++m)
        for (Eigen::Index n = 0; n <= m; ++n)
            worst = std::max(worst, std::abs(E(m, n) - std::conj(E(n, m))));
    return worst;
}

std::vector<std::pair<Complex, Complex>> normality_grid(int side) {
    if (side < 3) throw Error(Errc::GridDegenerate, "normality grid needs side >= 3");
    // golden-angle spiral of base points, radii in [0.1, 0.55]
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(side));
    for (int j = 0; j < side; ++j) {
        const double r = 0.1 + 0.45 * static_cast<double>(j) / (side - 1);
        pts.push_back(std::polar(r, 2.399963229728653 * j));
    }
    std::vector<std::pair<Complex, Complex>> grid;
    grid.reserve(pts.size() * pts.size());
    for (const Complex& w : pts)
        for (const Complex& z : pts) grid.emplace_back(w, z);
    return grid;
}

std::vector<std::pair<Complex, Complex>> default_normality_grid() { return normality_grid(5); }

namespace {

// tf(z) = conj(f(conj(z))): for a PPF pair this just conjugates the parameters.
PPFParams conjugated_params(const PPFParams& p) {
    return PPFParams{std::conj(p.a0), std::conj(p.a1), std::conj(p.b), p.kappa};
}

Complex kernel_power(Complex product, double kappa) {
    return std::pow(1.0 - product, Complex{-kappa});
}

}  // namespace

double normality_residual_grid(const PPFParams& p,
                               std::span<const std::pair<Complex, Complex>> grid) {
    if (grid.size() < 9)
        throw Error(Errc::GridDegenerate, "normality grid needs at least 9 points");
    const PPFParams pt = conjugated_params(p);
    double worst = 0.0;
    for (const auto& [w, z] : grid) {
        if (std::abs(w) >= 1.0 || std::abs(z) >= 1.0)
            throw Error(Errc::GridDegenerate, "grid point outside the disk");
        const Complex pw = ppf_phi_eval(p, w);
        const Complex tpz = ppf_phi_eval(pt, z);
        const Complex tpw = ppf_phi_eval(pt, w);
        const Complex pz = ppf_phi_eval(p, z);
        if (std::abs(pw * tpz) >= 1.0 || std::abs(tpw * pz) >= 1.0)
            throw Error(Errc::GridDegenerate, "|phi(w) tphi(z)| >= 1 on grid");
        const Complex lhs = ppf_psi_eval(p, w) * ppf_psi_eval(pt, z) * kernel_power(pw * tpz, p.kappa);
        const Complex rhs = ppf_psi_eval(pt, w) * ppf_psi_eval(p, z) * kernel_power(tpw * pz, p.kappa);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double commutator_block_residual(const OperatorMatrix& M) {
    const auto& E = M.entries();
    const Eigen::MatrixXcd C = E * E.adjoint() - E.adjoint() * E;
    const Eigen::Index half = E.rows() / 2;
    if (half == 0) return 0.0;
    return C.topLeftCorner(half, half).cwiseAbs().maxCoeff();
}

PPFClassification ppf_classify(const TruncatedSeries& phi, const TruncatedSeries& psi, double kappa) {
    PPFParams p;
    p.a0 = phi.coeff(0);
    p.a1 = phi.coeff(1);
    p.b = psi.coeff(0);
    p.kappa = kappa;
    const std::size_t N = std::min(phi.trunc_degree(), psi.trunc_degree());
    const double residual = std::max(max_coeff_distance(phi, ppf_phi_series(p, N)),
                                     max_coeff_distance(psi, ppf_psi_series(p, N)));
    return PPFClassification{p, residual, residual <= 1e-10};
}

namespace {

// Basis coordinates of K_w^(order): coordinate m is coeff * beta(m).
Eigen::VectorXcd kernel_coordinates(Complex w, std::size_t order, const WeightSequence& weights,
                                    std::size_t N) {
    const KernelVector kv = kernel(w, order, weights, N);
    Eigen::VectorXcd x(static_cast<Eigen::Index>(N + 1));
    for (std::size_t m = 0; m <= N; ++m)
        x(static_cast<Eigen::Index>(m)) = kv.coeffs.coeff(m) * weights.beta(m);
    return x;
}

}  // namespace

AdjointKernelCheck adjoint_kernel_check(const OperatorMatrix& M, Complex w, int order) {
    if (std::abs(w) > 0.9)
        throw Error(Errc::BasePointOutsideDisk, "adjoint kernel check requires |w| <= 0.9");
    if (order != 0 && order != 1)
        throw std::invalid_argument("adjoint_kernel_check: order must be 0 or 1");

    const std::size_t deg = M.dim() - 1;
    const WeightSequence& weights = M.weights();
    const Complex phi_w = evaluate(M.phi(), w);
    const Complex psi_w = evaluate(M.psi(), w);

    const Eigen::VectorXcd lhs =
        M.entries().adjoint() * kernel_coordinates(w, static_cast<std::size_t>(order), weights, deg);

    Eigen::VectorXcd rhs;
    if (order == 0) {
        rhs = std::conj(psi_w) * kernel_coordinates(phi_w, 0, weights, deg);
    } else {
        const Complex dphi_w = evaluate(derivative(M.phi()), w);
        const Complex dpsi_w = evaluate(derivative(M.psi()), w);
        rhs = std::conj(psi_w) * std::conj(dphi_w) * kernel_coordinates(phi_w, 1, weights, deg) +
              std::conj(dpsi_w) * kernel_coordinates(phi_w, 0, weights, deg);
    }

    // Tail estimate: both sides drop kernel coordinates beyond the block.
    // Coordinate m scales like m^order r^m / beta(m); extrapolate the weight
    // decay geometrically from its last ratio and sum the next block.
    const double r = std::max(std::abs(w), std::abs(phi_w));
    const double beta_last = weights.beta(deg);
    const double rho = deg > 0 ? weights.beta(deg - 1) / beta_last : 1.0;
    double tail = 0.0;
    double rm = std::pow(r, static_cast<double>(deg + 1));
    double grow = rho;
    for (std::size_t m = deg + 1; m <= 2 * deg + 1; ++m) {
        const double mb = (order == 0) ? 1.0 : static_cast<double>(m);
        const double coord = mb * rm * grow / beta_last;
        tail += coord * coord;
        rm *= r;
        grow *= rho;
    }
    tail = (1.0 + std::abs(psi_w)) * std::sqrt(tail);
    return AdjointKernelCheck{(lhs - rhs).norm(), tail};
}

std::vector<Complex> spectrum(const OperatorMatrix& M) {
    if (M.dim() > 512) throw std::invalid_argument("spectrum: dimension capped at 512");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M.entries(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error(Errc::ConvergenceFailure, "eigensolver exceeded its sweep budget");
    std::vector<Complex> eig(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
    // modulus descending, ties by argument in [-pi, pi)
    const auto arg_norm = [](Complex v) {
        const double a = std::arg(v);
        return a == std::numbers::pi ? -std::numbers::pi : a;
    };
    std::sort(eig.begin(), eig.end(), [&](Complex x, Complex y) {
        const double mx = std::abs(x), my = std::abs(y);
        if (mx != my) return mx > my;
        return arg_norm(x) < arg_norm(y);
    });
    return eig;
}

std::vector<double> eigen_ladder_check(std::span<const Complex> eigenvalues,
                                       const FixedPointInfo& fp, Complex psi_at_w0, int n_max) {
    if (!fp.interior)
        throw std::invalid_argument("eigen_ladder_check: needs an interior fixed point");
    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(n_max) + 1);
    Complex target = psi_at_w0;
    for (int n = 0; n <= n_max; ++n) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& ev : eigenvalues) best = std::min(best, std::abs(ev - target));
        distances.push_back(best);
        target *= fp.derivative_at_w0;
    }
    return distances;
}

std::vector<double> eigen_ladder_check(const OperatorMatrix& M, const FixedPointInfo& fp,
                                       Complex psi_at_w0, int n_max) {
    const std::vector<Complex> eig = spectrum(M);
    return eigen_ladder_check(eig, fp, psi_at_w0, n_max);
}

SymmetryReport classify_symmetry(const TruncatedSeries& phi, const TruncatedSeries& psi,
                                 const WeightSequence& weights, double kappa, std::size_t N,
                                 const ClassifyOptions& opts) {
    const OperatorMatrix M = build_matrix(phi, psi, weights, N);
    SymmetryReport report{};
    report.transpose_sym_residual = transpose_symmetry_residual(M);
    report.hermitian_residual = hermitian_residual(M);
    report.commutator_residual = commutator_block_residual(M);
    report.exact_tolerance = opts.exact_tolerance;

    const PPFClassification cls = ppf_classify(phi, psi, kappa);
    report.ppf_residual = cls.residual;
    if (cls.is_ppf) {
        report.ppf = cls.params;
        report.normality_residual = normality_residual_grid(cls.params, default_normality_grid());
        report.normality_tolerance = opts.exact_tolerance;
        report.normality_from_grid = true;
    } else {
        report.normality_residual = report.commutator_residual;
        report.normality_tolerance = opts.truncated_tolerance;
        report.normality_from_grid = false;
    }

    const double scale = std::max(1.0, M.entries().cwiseAbs().maxCoeff());
    report.complex_symmetric_standard_J = report.transpose_sym_residual <= opts.exact_tolerance * scale;
    report.hermitian = report.hermitian_residual <= opts.exact_tolerance * scale;
    report.normal = report.normality_residual <= report.normality_tolerance;
    return report;
}

}  // namespace wco
