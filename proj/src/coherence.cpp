#include "qcoh/coherence.hpp"

#include <cmath>

#include "qcoh/errors.hpp"

namespace qcoh {

DensityMatrix dephase(const DensityMatrix& rho) {
  const ComplexMatrix diag = rho.matrix().diagonal().asDiagonal();
  return DensityMatrix::validate(diag);
}

std::vector<double> diagonal_of(const DensityMatrix& rho) {
  std::vector<double> chi(static_cast<std::size_t>(rho.dim()));
  for (int j = 0; j < rho.dim(); ++j) chi[j] = rho(j, j).real();
  return chi;
}

namespace {

CoherenceResult closed_form(const DensityMatrix& rho, const GeneratorFunction& f, Variant v) {
  CoherenceResult r;
  r.f_name = f.name();
  r.variant = v;
  r.eigenvalues = eigenvalues_of(rho);
  r.diagonal = diagonal_of(rho);
  const double c = v == Variant::plain ? 1.0 / rho.dim() : 1.0;
  r.value = perspective_sum(r.eigenvalues, c, f) - perspective_sum(r.diagonal, c, f);
  return r;
}

}  // namespace

CoherenceResult coherence_f(const DensityMatrix& rho, const GeneratorFunction& f) {
  return closed_form(rho, f, Variant::plain);
}

CoherenceResult coherence_f_hat(const DensityMatrix& rho, const GeneratorFunction& f) {
  return closed_form(rho, f, Variant::hat);
}

CoherenceResult coherence(const DensityMatrix& rho, const GeneratorFunction& f, Variant v) {
  return closed_form(rho, f, v);
}

double coherence_by_definition(const DensityMatrix& rho, const GeneratorFunction& f,
                               Variant v) {
  const int d = rho.dim();
  const ComplexMatrix sigma = v == Variant::plain ? ComplexMatrix(identity(d) / double(d))
                                                  : identity(d);
  const ExtendedReal s_rho = quasi_relative_entropy(rho.matrix(), sigma, f);
  const ExtendedReal s_deph = quasi_relative_entropy(dephase(rho).matrix(), sigma, f);
  if (s_rho.is_infinite() || s_deph.is_infinite()) {
    throw UnsupportedLimit(f.name() + ": divergence to the reference state is infinite");
  }
  return s_rho.value() - s_deph.value();
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (const double x : p) {
    if (x > kEpsZero) h -= x * std::log(x);
  }
  return h;
}

double relative_entropy_coherence(const DensityMatrix& rho) {
  const auto chi = diagonal_of(rho);
  const auto lambda = eigenvalues_of(rho);
  return shannon_entropy(chi) - shannon_entropy(lambda);
}

PowerCoherence power_coherence(const DensityMatrix& rho, double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0) {
    throw ParamOutOfRange("power_coherence: alpha outside (0, 2) \\ {1}");
  }
  auto power_sum = [alpha](const std::vector<double>& v) {
    double s = 0.0;
    for (const double x : v) {
      if (x > kEpsZero) s += std::pow(x, alpha);
    }
    return s;
  };
  const double diff = power_sum(diagonal_of(rho)) - power_sum(eigenvalues_of(rho));
  PowerCoherence out;
  out.hat = diff / (1.0 - alpha);
  out.plain = std::pow(static_cast<double>(rho.dim()), alpha - 1.0) * out.hat;
  return out;
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  const int d = rho.dim();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (r != c && std::abs(rho(r, c)) > tol) return false;
  return true;
}

double dephasing_distance(const DensityMatrix& rho) {
  return trace_norm(rho.matrix() - dephase(rho).matrix());
}

PureState max_coherent_state(int d) {
  if (d < 1) throw DimensionMismatch("max_coherent_state: d must be >= 1");
  return PureState(ComplexVector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0)));
}

}  // namespace qcoh
