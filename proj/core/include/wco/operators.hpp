#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wco/maps.hpp"
#include "wco/space.hpp"

namespace wco {

/// Exact N x N matrix of the weighted composition operator f -> psi * (f o phi)
/// in the orthonormal basis e_n = z^n / beta(n):
///
///     entries(m, n) = [z^m](psi * phi^n) * beta(m) / beta(n).
///
/// Each entry is a finite product of polynomial coefficients, so the stored
/// block never changes when N grows; truncation only cuts rows and columns.
class OperatorMatrix {
public:
    OperatorMatrix(Eigen::MatrixXcd entries, WeightSequence weights, TruncatedSeries phi,
                   TruncatedSeries psi)
        : entries_(std::move(entries)),
          weights_(std::move(weights)),
          phi_(std::move(phi)),
          psi_(std::move(psi)) {}

    const Eigen::MatrixXcd& entries() const { return entries_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const WeightSequence& weights() const { return weights_; }
    const TruncatedSeries& phi() const { return phi_; }
    const TruncatedSeries& psi() const { return psi_; }

private:
    Eigen::MatrixXcd entries_;
    WeightSequence weights_;
    TruncatedSeries phi_;
    TruncatedSeries psi_;
};

/// Column n holds the basis coordinates of psi * (e_n o phi), with phi^n
/// built by iterated exact polynomial multiplication.  Requires |phi(0)| < 1
/// and weights covering degree N-1.
OperatorMatrix build_matrix(const TruncatedSeries& phi, const TruncatedSeries& psi,
                            const WeightSequence& weights, std::size_t N);

/// The standard conjugation [Jf](z) = conj(f(conj(z))) fixes each z^n and the
/// weights are real, so on basis coordinates it is entrywise conjugation.
std::vector<Complex> conjugate_coefficients(std::span<const Complex> v);

/// max |M(m,n) - M(n,m)|.  In this basis W = J W* J for the standard J is
/// entrywise equivalent to M = M^T (derivation at the definition), so the
/// residual compares exact entries and carries no truncation error.
double transpose_symmetry_residual(const OperatorMatrix& M);

/// max |M(m,n) - conj(M(n,m))|; exact entrywise, like the transpose residual.
double hermitian_residual(const OperatorMatrix& M);

/// Deterministic side x side grid of point pairs in the bidisk, radii kept
/// below 0.55 so self-maps keep |phi(w) tphi(z)| inside the disk.
std::vector<std::pair<Complex, Complex>> normality_grid(int side);

/// The default 5 x 5 (25-point) grid.
std::vector<std::pair<Complex, Complex>> default_normality_grid();

/// Pointwise normality identity for a PPF pair on the kappa kernel:
///
///   psi(w) tpsi(z) (1 - phi(w) tphi(z))^(-kappa)
///     = tpsi(w) psi(z) (1 - tphi(w) phi(z))^(-kappa)
///
/// where tf(z) = conj(f(conj(z))).  Evaluated in closed form, so the residual
/// carries no truncation error.  Requires grid points in the bidisk with
/// |phi(w) tphi(z)| < 1 and at least 9 of them.
double normality_residual_grid(const PPFParams& p,
                               std::span<const std::pair<Complex, Complex>> grid);

/// Secondary diagnostic: sup-norm of W W* - W* W over the leading
/// floor(N/2) block.  Unlike the grid identity this carries truncation tails.
double commutator_block_residual(const OperatorMatrix& M);

struct PPFClassification {
    PPFParams params;
    double residual;
    bool is_ppf;  // residual <= 1e-10
};

/// Recovers b = psi(0), a0 = phi(0), a1 = [z^1] phi, rebuilds the exact PPF
/// pair and reports the max coefficient deviation from (phi, psi).
PPFClassification ppf_classify(const TruncatedSeries& phi, const TruncatedSeries& psi, double kappa);

struct AdjointKernelCheck {
    double residual;
    double tail_estimate;
};

/// Residual of the adjoint kernel identities in basis coordinates:
///   order 0:  W* K_w = conj(psi(w)) K_phi(w)
///   order 1:  W* K_w' = conj(psi(w)) conj(phi'(w)) K'_phi(w) + conj(psi'(w)) K_phi(w)
/// Both sides are truncated, so the residual is expected below the reported
/// tail estimate rather than zero.  Requires |w| <= 0.9.
AdjointKernelCheck adjoint_kernel_check(const OperatorMatrix& M, Complex w, int order);

/// All eigenvalues of the truncated matrix, modulus-descending, ties broken
/// by argument in [-pi, pi).  Requires dim <= 512.
std::vector<Complex> spectrum(const OperatorMatrix& M);

/// Distances from psi(w0) phi'(w0)^n, n = 0..n_max, to the nearest computed
/// eigenvalue.  Requires an interior fixed point.
std::vector<double> eigen_ladder_check(const OperatorMatrix& M, const FixedPointInfo& fp,
                                       Complex psi_at_w0, int n_max);
std::vector<double> eigen_ladder_check(std::span<const Complex> eigenvalues,
                                       const FixedPointInfo& fp, Complex psi_at_w0, int n_max);

/// Classification outcome with the residual metrics and tolerances that
/// produced each verdict.
struct SymmetryReport {
    double transpose_sym_residual;
    double hermitian_residual;
    double normality_residual;
    double commutator_residual;  // secondary diagnostic, truncation-limited
    std::optional<PPFParams> ppf;
    double ppf_residual;
    bool complex_symmetric_standard_J;
    bool hermitian;
    bool normal;
    double exact_tolerance;      // applied to the entrywise residuals
    double normality_tolerance;  // applied to normality_residual
    bool normality_from_grid;    // false -> commutator fallback for non-PPF symbols
};

struct ClassifyOptions {
    double exact_tolerance = 1e-12;
    double truncated_tolerance = 1e-6;
    int grid_min_points = 25;
};

/// Builds the matrix, measures the residuals, and classifies.  When the
/// symbols match a PPF pair the normality verdict uses the exact grid
/// identity; otherwise it falls back to the commutator diagnostic with the
/// truncation-limited tolerance.
SymmetryReport classify_symmetry(const TruncatedSeries& phi, const TruncatedSeries& psi,
                                 const WeightSequence& weights, double kappa, std::size_t N,
                                 const ClassifyOptions& opts = {});

}  // namespace wco
