#include "qcoh/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcoh {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw NotSquare(std::string(what) + ": expected a non-empty square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()),
                    static_cast<double>(std::abs(m.rows() - m.cols())));
  }
}

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

}  // namespace

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, const Tolerances& tol) {
  require_square(m, "validate_density");
  if (!m.allFinite()) {
    throw ValidationError("validate_density: matrix has non-finite entries",
                          std::numeric_limits<double>::infinity());
  }

  const double herm_dev = max_abs(m - m.adjoint());
  if (herm_dev > tol.herm) {
    throw NotHermitian("validate_density: matrix is not Hermitian", herm_dev);
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());

  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw TraceNotOne("validate_density: trace " + std::to_string(tr) + " is not 1",
                      std::abs(tr - 1.0));
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("validate_density: eigen-solver did not converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -tol.psd) {
    throw NotPositive("validate_density: matrix has a negative eigenvalue", -min_eig);
  }

  if (min_eig < 0.0) {
    const RealVector clipped = solver.eigenvalues().cwiseMax(0.0);
    h = solver.eigenvectors() * clipped.cast<Complex>().asDiagonal() *
        solver.eigenvectors().adjoint();
    h = 0.5 * (h + h.adjoint());
  }
  const double new_tr = h.trace().real();
  if (new_tr != 1.0) h /= new_tr;
  return DensityMatrix(std::move(h));
}

PureState::PureState(ComplexVector amplitudes, double tol) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw NotNormalized("PureState: empty amplitude vector", 1.0);
  if (!amps_.allFinite()) {
    throw NotNormalized("PureState: non-finite amplitude", std::numeric_limits<double>::infinity());
  }
  const double dev = std::abs(amps_.norm() - 1.0);
  if (dev > tol) throw NotNormalized("PureState: amplitudes are not unit norm", dev);
}

DensityMatrix PureState::as_density() const {
  return DensityMatrix::validate(amps_ * amps_.adjoint());
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

SpectralDecomposition hermitian_eigen(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigen");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("hermitian_eigen: eigen-solver did not converge");
  }
  // Eigen returns ascending order.
  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

SpectralDecomposition spectral_decompose(const DensityMatrix& rho) {
  return hermitian_eigen(rho.matrix());
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_function(const ComplexMatrix& h,
                                 const std::function<double(double)>& fn) {
  const SpectralDecomposition sd = hermitian_eigen(h);
  RealVector mapped(sd.size());
  for (int j = 0; j < sd.size(); ++j) mapped(j) = fn(sd.eigenvalues(j));
  return sd.eigenvectors * mapped.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix matrix_unit(int d, int row, int col) {
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  e(row, col) = 1.0;
  return e;
}

DensityMatrix basis_state(int d, int n) {
  if (n < 0 || n >= d) throw DimensionMismatch("basis_state: index out of range");
  return DensityMatrix::validate(matrix_unit(d, n, n));
}

DensityMatrix maximally_mixed(int d) {
  return DensityMatrix::validate(identity(d) / static_cast<double>(d));
}

DensityMatrix diagonal_state(std::span<const double> probabilities) {
  const int d = static_cast<int>(probabilities.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) m(j, j) = probabilities[j];
  return DensityMatrix::validate(m);
}

DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw DimensionMismatch("mixture: weights and states differ in length");
  }
  const int d = states.front().dim();
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != d) throw DimensionMismatch("mixture: states differ in dimension");
    m += weights[k] * states[k].matrix();
  }
  return DensityMatrix::validate(m);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PureState random_pure(int d, Rng& rng) {
  if (d < 1) throw DimensionMismatch("random_pure: d must be >= 1");
  ComplexVector v(d);
  for (int j = 0; j < d; ++j) v(j) = gaussian_complex(rng);
  v /= v.norm();
  return PureState(std::move(v));
}

PureState random_pure(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

DensityMatrix random_density(int d, int rank, Rng& rng) {
  if (d < 1 || rank < 1 || rank > d) {
    throw DimensionMismatch("random_density: need 1 <= rank <= d");
  }
  ComplexMatrix g(d, rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < d; ++r) g(r, c) = gaussian_complex(rng);
  ComplexMatrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  return DensityMatrix::validate(m);
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  ComplexMatrix z(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) z(r, c) = gaussian_complex(rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0 ? rjj / a : Complex(1.0));
  }
  return q;
}

std::vector<double> random_probabilities(int n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace qcoh
