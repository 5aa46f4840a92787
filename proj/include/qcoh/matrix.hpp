#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcoh/errors.hpp"

namespace qcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Eigenvalues (and overlap masses) at or below this are treated as exactly
// zero by every downstream formula.
inline constexpr double kEpsZero = 1e-12;
inline constexpr double kTolRecon = 1e-10;
inline constexpr double kTolOrth = 1e-10;
inline constexpr double kTolNorm = 1e-10;

struct Tolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
};

class DensityMatrix {
 public:
  // Checks Hermiticity, unit trace and positivity. Violations within tolerance
  // are repaired (hermitised, negative eigenvalues clipped, trace renormalised).
  static DensityMatrix validate(const ComplexMatrix& m, const Tolerances& tol = {});

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

class PureState {
 public:
  // Throws NotNormalized if the Euclidean norm is off by more than tol.
  explicit PureState(ComplexVector amplitudes, double tol = kTolNorm);

  int dim() const noexcept { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  DensityMatrix as_density() const;

 private:
  ComplexVector amps_;
};

// Eigen-pairs of a Hermitian matrix, eigenvalues descending; eigenvectors are
// the columns of `eigenvectors`.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  ComplexVector vector(int j) const { return eigenvectors.col(j); }
  ComplexMatrix reconstruct() const;
};

SpectralDecomposition spectral_decompose(const DensityMatrix& rho);
// Same as above for any Hermitian matrix (only the lower triangle is read).
SpectralDecomposition hermitian_eigen(const ComplexMatrix& h);

double trace_norm(const ComplexMatrix& m);
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

// Applies a real function to the spectrum of a Hermitian matrix.
ComplexMatrix hermitian_function(const ComplexMatrix& h, const std::function<double(double)>& fn);

// Basic states and operators in the computational basis.
ComplexMatrix identity(int d);
ComplexMatrix matrix_unit(int d, int row, int col);
DensityMatrix basis_state(int d, int n);
DensityMatrix maximally_mixed(int d);
DensityMatrix diagonal_state(std::span<const double> probabilities);

// Convex combination sum_k weights[k] * states[k].
DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states);

// Deterministic 64-bit mixing used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Haar-random pure state: normalised complex Gaussian vector.
PureState random_pure(int d, Rng& rng);
PureState random_pure(int d, std::uint64_t seed);

// G G* / Tr(G G*) with G a d x rank complex Gaussian matrix.
DensityMatrix random_density(int d, int rank, Rng& rng);
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
ComplexMatrix random_unitary(int d, Rng& rng);

// Random probability vector, uniform on the simplex.
std::vector<double> random_probabilities(int n, Rng& rng);

}  // namespace qcoh
