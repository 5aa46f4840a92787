#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcoh/matrix.hpp"

namespace qcoh {

inline constexpr double kTolCompleteness = 1e-10;

class NotUnital : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A completely positive map in Kraus form, X -> sum_n K_n X K_n*. No
// completeness requirement; duals of channels live here.
class KrausMap {
 public:
  KrausMap(int dim, std::vector<ComplexMatrix> ops, std::string label = {});

  int dim() const noexcept { return dim_; }
  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return ops_.size(); }

  ComplexMatrix apply(const ComplexMatrix& x) const;
  // || sum K* K - I ||_F and || sum K K* - I ||_F
  double completeness_defect() const;
  double unitality_defect() const;

 private:
  int dim_;
  std::vector<ComplexMatrix> ops_;
  std::string label_;
};

// Trace-preserving Kraus map (sum K* K = I within kTolCompleteness).
class KrausChannel {
 public:
  explicit KrausChannel(KrausMap map, double tol = kTolCompleteness);
  KrausChannel(int dim, std::vector<ComplexMatrix> ops, std::string label = {});

  const KrausMap& map() const noexcept { return map_; }
  int dim() const noexcept { return map_.dim(); }
  const std::vector<ComplexMatrix>& ops() const noexcept { return map_.ops(); }
  const std::string& label() const noexcept { return map_.label(); }

  ComplexMatrix apply(const ComplexMatrix& x) const { return map_.apply(x); }
  DensityMatrix apply(const DensityMatrix& rho) const;
  bool is_unital(double tol = kTolCompleteness) const { return map_.unitality_defect() <= tol; }

 private:
  KrausMap map_;
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// Adjoint with respect to the Hilbert-Schmidt inner product: Kraus ops K_n*.
KrausMap dual(const KrausMap& m);
KrausMap dual(const KrausChannel& ch);

struct MeasurementOutcome {
  int index = 0;             // which Kraus operator
  double probability = 0.0;  // Tr K rho K*
  // K rho K* / p; absent when p <= kEpsZero.
  std::optional<DensityMatrix> post_state;
};

std::vector<MeasurementOutcome> selective_outcomes(const KrausChannel& ch,
                                                   const DensityMatrix& rho);

// Channel whose Kraus operators are all diagonal: K_j = sum_n k_{jn} |n><n|.
// The coefficient table has one row per Kraus operator and one column per
// basis index, with unit-norm columns.
class GioChannel {
 public:
  static GioChannel from_coefficients(const ComplexMatrix& k, std::string label = {});
  // Throws NotGio when a Kraus operator has an off-diagonal entry above tol.
  static GioChannel from_channel(const KrausChannel& ch, double tol = 1e-12);

  const KrausChannel& channel() const noexcept { return channel_; }
  const ComplexMatrix& coefficients() const noexcept { return k_; }
  int dim() const noexcept { return channel_.dim(); }
  int num_kraus() const noexcept { return static_cast<int>(k_.rows()); }

  DensityMatrix apply(const DensityMatrix& rho) const { return channel_.apply(rho); }

 private:
  GioChannel(KrausChannel ch, ComplexMatrix k) : channel_(std::move(ch)), k_(std::move(k)) {}
  KrausChannel channel_;
  ComplexMatrix k_;
};

// Every Kraus operator diagonal within tol and every basis state fixed.
bool is_gio(const KrausChannel& ch, double tol);
// K Delta(X) K* = Delta(K X K*) for every Kraus operator on all matrix units.
bool is_sio(const KrausChannel& ch, double tol);

GioChannel random_gio(int d, int num_kraus, Rng& rng);
GioChannel random_gio(int d, int num_kraus, std::uint64_t seed);

// Kraus operators sqrt(w_j) diag(exp(i phases(j, n))). Throws BadWeights.
GioChannel diagonal_unitary_mixture(std::span<const double> weights,
                                    const Eigen::MatrixXd& phases);

KrausChannel identity_channel(int d);
KrausChannel dephasing_channel(int d);
KrausChannel unitary_channel(const ComplexMatrix& u);
// K_ij = |i><j| / sqrt(d): every state goes to I/d.
KrausChannel depolarizing_channel(int d);
// K_j = |0><j|: every state goes to |0><0|.
KrausChannel erasure_channel(int d);
// I (x) K on C^d (x) C^d for the two channels above.
KrausChannel depolarizing_extension(int d);
KrausChannel erasure_extension(int d);

// Mixture of random unitaries; unital by construction.
KrausChannel random_unital_channel(int d, int num_unitaries, Rng& rng);
// Random channel from an isometry: stacked Kraus ops form a Haar-random
// column block of a unitary.
KrausChannel random_channel(int d, int num_kraus, Rng& rng);

// R(w) = sigma^{1/2} L*( L(sigma)^{-1/2} w L(sigma)^{-1/2} ) sigma^{1/2}
class PetzRecovery {
 public:
  ComplexMatrix apply(const ComplexMatrix& omega) const;

 private:
  friend PetzRecovery petz_recovery(const KrausChannel& ch, const ComplexMatrix& sigma);
  PetzRecovery(ComplexMatrix sigma_sqrt, ComplexMatrix out_inv_sqrt, KrausMap adjoint)
      : sigma_sqrt_(std::move(sigma_sqrt)),
        out_inv_sqrt_(std::move(out_inv_sqrt)),
        adjoint_(std::move(adjoint)) {}
  ComplexMatrix sigma_sqrt_;
  ComplexMatrix out_inv_sqrt_;
  KrausMap adjoint_;
};

// sigma must be positive definite but need not have unit trace (sigma = I is
// allowed). Throws SingularState if sigma or L(sigma) has an eigenvalue <= kEpsZero.
PetzRecovery petz_recovery(const KrausChannel& ch, const ComplexMatrix& sigma);
PetzRecovery petz_recovery(const KrausChannel& ch, const DensityMatrix& sigma);

struct SaturationWitness {
  int n = 0;
  int m = 0;
  // |sum_j conj(k_jn) k_jm|^2 for the worst coherent pair
  double value = 1.0;
  // Cauchy-Schwarz diagnosis: k_{.n} = alpha k_{.m}
  Complex alpha{0.0, 0.0};
  double proportionality_residual = 0.0;
};

struct SaturationResult {
  bool saturates = true;
  // Worst pair among those with |<n|rho|m>| > tol; absent for incoherent rho.
  std::optional<SaturationWitness> witness;
};

SaturationResult gio_saturation_check(const GioChannel& ch, const DensityMatrix& rho,
                                      double tol);
SaturationResult gio_saturation_check(const KrausChannel& ch, const DensityMatrix& rho,
                                      double tol);

// || rho - L*(L(rho)) ||_1, for unital L (NotUnital otherwise).
double recovery_defect(const KrausChannel& ch, const DensityMatrix& rho);

}  // namespace qcoh
