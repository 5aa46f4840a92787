#include "qcoh/channels.hpp"

#include <cmath>
#include <string>

namespace qcoh {

namespace {

ComplexMatrix diagonal_part(const ComplexMatrix& x) {
  return x.diagonal().asDiagonal();
}

double max_offdiag(const ComplexMatrix& x) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      if (r != c) worst = std::max(worst, std::abs(x(r, c)));
  return worst;
}

ComplexMatrix positive_power(const ComplexMatrix& h, double exponent, const char* what) {
  const SpectralDecomposition sd = hermitian_eigen(0.5 * (h + h.adjoint()));
  if (sd.eigenvalues.minCoeff() <= kEpsZero) {
    throw SingularState(std::string(what) + ": operator is not positive definite");
  }
  RealVector mapped(sd.size());
  for (int j = 0; j < sd.size(); ++j) mapped(j) = std::pow(sd.eigenvalues(j), exponent);
  return sd.eigenvectors * mapped.cast<Complex>().asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace

KrausMap::KrausMap(int dim, std::vector<ComplexMatrix> ops, std::string label)
    : dim_(dim), ops_(std::move(ops)), label_(std::move(label)) {
  if (dim_ < 1) throw DimensionMismatch("KrausMap: dimension must be >= 1");
  if (ops_.empty()) throw DimensionMismatch("KrausMap: needs at least one Kraus operator");
  for (const auto& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw DimensionMismatch("KrausMap: Kraus operator of size " + std::to_string(k.rows()) +
                              "x" + std::to_string(k.cols()) + " in dimension " +
                              std::to_string(dim_));
    }
  }
}

ComplexMatrix KrausMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw DimensionMismatch("apply: operand dimension " + std::to_string(x.rows()) +
                            " does not match channel dimension " + std::to_string(dim_));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : ops_) out.noalias() += k * x * k.adjoint();
  return out;
}

double KrausMap::completeness_defect() const {
  ComplexMatrix s = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : ops_) s.noalias() += k.adjoint() * k;
  return (s - identity(dim_)).norm();
}

double KrausMap::unitality_defect() const {
  ComplexMatrix s = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : ops_) s.noalias() += k * k.adjoint();
  return (s - identity(dim_)).norm();
}

KrausChannel::KrausChannel(KrausMap map, double tol) : map_(std::move(map)) {
  const double defect = map_.completeness_defect();
  if (defect > tol) {
    throw NotTracePreserving("KrausChannel: Kraus operators violate sum K*K = I", defect);
  }
}

KrausChannel::KrausChannel(int dim, std::vector<ComplexMatrix> ops, std::string label)
    : KrausChannel(KrausMap(dim, std::move(ops), std::move(label))) {}

DensityMatrix KrausChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix::validate(map_.apply(rho.matrix()));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) { return ch.apply(rho); }

KrausMap dual(const KrausMap& m) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(m.size());
  for (const auto& k : m.ops()) ops.push_back(k.adjoint());
  return KrausMap(m.dim(), std::move(ops), m.label().empty() ? "" : m.label() + "*");
}

KrausMap dual(const KrausChannel& ch) { return dual(ch.map()); }

std::vector<MeasurementOutcome> selective_outcomes(const KrausChannel& ch,
                                                   const DensityMatrix& rho) {
  if (rho.dim() != ch.dim()) {
    throw DimensionMismatch("selective_outcomes: state and channel dimensions differ");
  }
  std::vector<MeasurementOutcome> out;
  out.reserve(ch.ops().size());
  for (std::size_t n = 0; n < ch.ops().size(); ++n) {
    const ComplexMatrix& k = ch.ops()[n];
    const ComplexMatrix branch = k * rho.matrix() * k.adjoint();
    MeasurementOutcome o;
    o.index = static_cast<int>(n);
    o.probability = branch.trace().real();
    if (o.probability > kEpsZero) o.post_state = DensityMatrix::validate(branch / o.probability);
    out.push_back(std::move(o));
  }
  return out;
}

GioChannel GioChannel::from_coefficients(const ComplexMatrix& k, std::string label) {
  const int m = static_cast<int>(k.rows());
  const int d = static_cast<int>(k.cols());
  std::vector<ComplexMatrix> ops;
  ops.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) ops.push_back(k.row(j).transpose().asDiagonal());
  return GioChannel(KrausChannel(d, std::move(ops), std::move(label)), k);
}

GioChannel GioChannel::from_channel(const KrausChannel& ch, double tol) {
  const int m = static_cast<int>(ch.ops().size());
  ComplexMatrix k(m, ch.dim());
  for (int j = 0; j < m; ++j) {
    const double off = max_offdiag(ch.ops()[j]);
    if (off > tol) {
      throw NotGio("Kraus operator " + std::to_string(j) +
                   " is not diagonal (off-diagonal magnitude " + std::to_string(off) + ")");
    }
    k.row(j) = ch.ops()[j].diagonal().transpose();
  }
  return GioChannel(ch, std::move(k));
}

bool is_gio(const KrausChannel& ch, double tol) {
  for (const auto& k : ch.ops())
    if (max_offdiag(k) > tol) return false;
  const int d = ch.dim();
  for (int n = 0; n < d; ++n) {
    const ComplexMatrix e = matrix_unit(d, n, n);
    if (trace_norm(ch.apply(e) - e) > tol) return false;
  }
  return true;
}

bool is_sio(const KrausChannel& ch, double tol) {
  const int d = ch.dim();
  for (const auto& k : ch.ops()) {
    for (int n = 0; n < d; ++n) {
      for (int m = 0; m < d; ++m) {
        const ComplexMatrix e = matrix_unit(d, n, m);
        const ComplexMatrix lhs = k * diagonal_part(e) * k.adjoint();
        const ComplexMatrix rhs = diagonal_part(k * e * k.adjoint());
        if (max_abs(lhs - rhs) > tol) return false;
      }
    }
  }
  return true;
}

GioChannel random_gio(int d, int num_kraus, Rng& rng) {
  if (d < 1 || num_kraus < 1) throw DimensionMismatch("random_gio: need d >= 1 and m >= 1");
  ComplexMatrix k(num_kraus, d);
  for (int n = 0; n < d; ++n) k.col(n) = random_pure(num_kraus, rng).amplitudes();
  return GioChannel::from_coefficients(k, "random-gio");
}

GioChannel random_gio(int d, int num_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_gio(d, num_kraus, rng);
}

GioChannel diagonal_unitary_mixture(std::span<const double> weights,
                                    const Eigen::MatrixXd& phases) {
  if (weights.empty() || static_cast<Eigen::Index>(weights.size()) != phases.rows()) {
    throw BadWeights("diagonal_unitary_mixture: one weight per unitary required");
  }
  double total = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) throw BadWeights("diagonal_unitary_mixture: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw BadWeights("diagonal_unitary_mixture: weights sum to " + std::to_string(total));
  }
  ComplexMatrix k(phases.rows(), phases.cols());
  for (Eigen::Index j = 0; j < phases.rows(); ++j)
    for (Eigen::Index n = 0; n < phases.cols(); ++n)
      k(j, n) = std::sqrt(weights[j]) * std::polar(1.0, phases(j, n));
  return GioChannel::from_coefficients(k, "diagonal-unitary-mixture");
}

KrausChannel identity_channel(int d) { return KrausChannel(d, {identity(d)}, "identity"); }

KrausChannel dephasing_channel(int d) {
  std::vector<ComplexMatrix> ops;
  for (int n = 0; n < d; ++n) ops.push_back(matrix_unit(d, n, n));
  return KrausChannel(d, std::move(ops), "dephase:" + std::to_string(d));
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  return KrausChannel(static_cast<int>(u.rows()), {u}, "unitary");
}

KrausChannel depolarizing_channel(int d) {
  std::vector<ComplexMatrix> ops;
  const double s = 1.0 / std::sqrt(double(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ops.push_back(s * matrix_unit(d, i, j));
  return KrausChannel(d, std::move(ops), "depolarize:" + std::to_string(d));
}

KrausChannel erasure_channel(int d) {
  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < d; ++j) ops.push_back(matrix_unit(d, 0, j));
  return KrausChannel(d, std::move(ops), "erase:" + std::to_string(d));
}

namespace {

KrausChannel extend(const KrausChannel& inner, int d, std::string label) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(inner.ops().size());
  const ComplexMatrix id = identity(d);
  for (const auto& k : inner.ops()) ops.push_back(tensor(id, k));
  return KrausChannel(d * inner.dim(), std::move(ops), std::move(label));
}

}  // namespace

KrausChannel depolarizing_extension(int d) {
  if (d < 2) throw DimensionMismatch("depolarizing_extension: d must be >= 2");
  return extend(depolarizing_channel(d), d, "depol-ext:" + std::to_string(d));
}

KrausChannel erasure_extension(int d) {
  if (d < 2) throw DimensionMismatch("erasure_extension: d must be >= 2");
  return extend(erasure_channel(d), d, "erase-ext:" + std::to_string(d));
}

KrausChannel random_unital_channel(int d, int num_unitaries, Rng& rng) {
  const auto w = random_probabilities(num_unitaries, rng);
  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < num_unitaries; ++j) ops.push_back(std::sqrt(w[j]) * random_unitary(d, rng));
  return KrausChannel(d, std::move(ops), "random-unital");
}

KrausChannel random_channel(int d, int num_kraus, Rng& rng) {
  const ComplexMatrix u = random_unitary(d * num_kraus, rng);
  std::vector<ComplexMatrix> ops;
  for (int j = 0; j < num_kraus; ++j) ops.push_back(u.block(j * d, 0, d, d));
  return KrausChannel(d, std::move(ops), "random");
}

ComplexMatrix PetzRecovery::apply(const ComplexMatrix& omega) const {
  return sigma_sqrt_ * adjoint_.apply(out_inv_sqrt_ * omega * out_inv_sqrt_) * sigma_sqrt_;
}

PetzRecovery petz_recovery(const KrausChannel& ch, const ComplexMatrix& sigma) {
  if (sigma.rows() != ch.dim() || sigma.cols() != ch.dim()) {
    throw DimensionMismatch("petz_recovery: sigma and channel dimensions differ");
  }
  ComplexMatrix sigma_sqrt = positive_power(sigma, 0.5, "petz_recovery(sigma)");
  ComplexMatrix out_inv_sqrt = positive_power(ch.apply(sigma), -0.5, "petz_recovery(L(sigma))");
  return PetzRecovery(std::move(sigma_sqrt), std::move(out_inv_sqrt), dual(ch));
}

PetzRecovery petz_recovery(const KrausChannel& ch, const DensityMatrix& sigma) {
  return petz_recovery(ch, sigma.matrix());
}

SaturationResult gio_saturation_check(const GioChannel& ch, const DensityMatrix& rho,
                                      double tol) {
  if (rho.dim() != ch.dim()) {
    throw DimensionMismatch("gio_saturation_check: state and channel dimensions differ");
  }
  const ComplexMatrix& k = ch.coefficients();
  SaturationResult result;
  for (int n = 0; n < rho.dim(); ++n) {
    for (int m = n + 1; m < rho.dim(); ++m) {
      if (std::abs(rho(n, m)) <= tol) continue;
      // sum_j conj(k_jn) k_jm
      const Complex inner = k.col(n).dot(k.col(m));
      const double value = std::norm(inner);
      if (!result.witness || value < result.witness->value) {
        SaturationWitness w;
        w.n = n;
        w.m = m;
        w.value = value;
        const double norm_m = k.col(m).squaredNorm();
        w.alpha = norm_m > 0.0 ? k.col(m).dot(k.col(n)) / norm_m : Complex(0.0);
        w.proportionality_residual = (k.col(n) - w.alpha * k.col(m)).norm();
        result.witness = w;
      }
    }
  }
  result.saturates = !result.witness || result.witness->value >= 1.0 - tol;
  return result;
}

SaturationResult gio_saturation_check(const KrausChannel& ch, const DensityMatrix& rho,
                                      double tol) {
  return gio_saturation_check(GioChannel::from_channel(ch, tol), rho, tol);
}

double recovery_defect(const KrausChannel& ch, const DensityMatrix& rho) {
  const double defect = ch.map().unitality_defect();
  if (defect > kTolCompleteness) {
    throw NotUnital("recovery_defect: channel is not unital", defect);
  }
  const ComplexMatrix recovered = dual(ch).apply(ch.apply(rho.matrix()));
  return trace_norm(rho.matrix() - recovered);
}

}  // namespace qcoh
