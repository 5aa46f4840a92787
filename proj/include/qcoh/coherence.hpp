#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcoh/divergence.hpp"
#include "qcoh/generator.hpp"
#include "qcoh/matrix.hpp"

namespace qcoh {

// The incoherent basis is always the computational basis.

struct CoherenceResult {
  double value = 0.0;
  std::string f_name;
  Variant variant = Variant::plain;
  std::vector<double> eigenvalues;  // lambda_j of rho, descending
  std::vector<double> diagonal;     // chi_j = <j|rho|j>
};

DensityMatrix dephase(const DensityMatrix& rho);
std::vector<double> diagonal_of(const DensityMatrix& rho);

// C_f(rho) = sum_j lambda_j f(1/(d lambda_j)) - sum_j chi_j f(1/(d chi_j))
CoherenceResult coherence_f(const DensityMatrix& rho, const GeneratorFunction& f);
// C^_f(rho) = sum_j lambda_j f(1/lambda_j) - sum_j chi_j f(1/chi_j)
CoherenceResult coherence_f_hat(const DensityMatrix& rho, const GeneratorFunction& f);
CoherenceResult coherence(const DensityMatrix& rho, const GeneratorFunction& f, Variant v);

// Same quantity evaluated from its definition, S_f(rho||sigma) - S_f(Delta(rho)||sigma)
// with sigma = I/d (plain) or I (hat), through the overlap-based divergence.
double coherence_by_definition(const DensityMatrix& rho, const GeneratorFunction& f, Variant v);

// Shannon entropy in nats with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p);

// S(Delta(rho)) - S(rho) in nats.
double relative_entropy_coherence(const DensityMatrix& rho);

struct PowerCoherence {
  double plain = 0.0;
  double hat = 0.0;
};

// C^_alpha = (sum chi^alpha - sum lambda^alpha) / (1 - alpha), C_alpha = d^(alpha-1) C^_alpha.
// alpha in (0, 2) \ {1}.
PowerCoherence power_coherence(const DensityMatrix& rho, double alpha);

bool is_incoherent(const DensityMatrix& rho, double tol);
// || rho - Delta(rho) ||_1
double dephasing_distance(const DensityMatrix& rho);

// (1/sqrt(d)) sum_j |j>
PureState max_coherent_state(int d);

}  // namespace qcoh
