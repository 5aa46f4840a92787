#include "qcoh/divergence.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "qcoh/errors.hpp"

namespace qcoh {

namespace {

constexpr double kGroupTol = 1e-12;

struct EigenGroup {
  double value;  // mean eigenvalue of the group; 0 for the null group
  int begin;
  int end;
};

// Consecutive (descending) eigenvalues closer than kGroupTol form one group;
// everything at or below kEpsZero forms a single null group.
std::vector<EigenGroup> group_spectrum(const RealVector& eig) {
  std::vector<EigenGroup> groups;
  const int n = static_cast<int>(eig.size());
  int j = 0;
  while (j < n) {
    if (eig(j) <= kEpsZero) {
      groups.push_back({0.0, j, n});
      break;
    }
    int k = j + 1;
    double sum = eig(j);
    while (k < n && eig(k) > kEpsZero && eig(k - 1) - eig(k) <= kGroupTol) {
      sum += eig(k);
      ++k;
    }
    groups.push_back({sum / (k - j), j, k});
    j = k;
  }
  return groups;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a.rows()) +
                            " and " + std::to_string(b.rows()) + " differ");
  }
}

// lambda f(mu / lambda) weighted by the overlap mass, with the zero-eigenvalue
// conventions applied. Returns +inf via ExtendedReal.
ExtendedReal divergence_term(double lambda, double mu, double mass, const GeneratorFunction& f) {
  const bool lambda_zero = lambda <= kEpsZero;
  const bool mu_zero = mu <= kEpsZero;
  if (lambda_zero && mu_zero) return ExtendedReal(0.0);

  ExtendedReal unweighted;
  if (lambda_zero) {
    unweighted = f.limit_at_inf_weighted(mu);
  } else if (mu_zero) {
    unweighted = f.limit_at_zero().scaled(lambda);
  } else {
    unweighted = ExtendedReal(lambda * f.eval(mu / lambda));
  }
  if (unweighted.is_infinite()) {
    return mass > kEpsZero ? ExtendedReal::infinity() : ExtendedReal(0.0);
  }
  return ExtendedReal(unweighted.value() * mass);
}

}  // namespace

ExtendedReal quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const GeneratorFunction& f) {
  require_same_dim(a, b, "quasi_relative_entropy");
  const SpectralDecomposition sa = hermitian_eigen(a);
  const SpectralDecomposition sb = hermitian_eigen(b);

  // |<psi_k|phi_j>|^2, rows indexed by k (B), columns by j (A).
  const Eigen::MatrixXd overlap = (sb.eigenvectors.adjoint() * sa.eigenvectors).cwiseAbs2();

  const auto ga = group_spectrum(sa.eigenvalues);
  const auto gb = group_spectrum(sb.eigenvalues);

  ExtendedReal total(0.0);
  for (const auto& gj : ga) {
    for (const auto& gk : gb) {
      const double mass =
          overlap.block(gk.begin, gj.begin, gk.end - gk.begin, gj.end - gj.begin).sum();
      total += divergence_term(gj.value, gk.value, mass, f);
      if (total.is_infinite()) return total;
    }
  }
  return total;
}

ExtendedReal quasi_relative_entropy(const DensityMatrix& a, const DensityMatrix& b,
                                    const GeneratorFunction& f) {
  return quasi_relative_entropy(a.matrix(), b.matrix(), f);
}

ExtendedReal oracle_quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const GeneratorFunction& f) {
  require_same_dim(a, b, "oracle_quasi_relative_entropy");
  const int d = static_cast<int>(a.rows());
  const double min_a = hermitian_eigen(a).eigenvalues.minCoeff();
  const double min_b = hermitian_eigen(b).eigenvalues.minCoeff();
  if (min_a <= kEpsZero || min_b <= kEpsZero) {
    throw SingularState("oracle_quasi_relative_entropy: both arguments must be full rank");
  }

  const ComplexMatrix a_inv = a.inverse();
  // vec(B X A^{-1}) = ((A^{-1})^T (x) B) vec(X) for column-major vec.
  ComplexMatrix modular = Eigen::kroneckerProduct(a_inv.transpose(), b).eval();
  modular = 0.5 * (modular + modular.adjoint());
  const ComplexMatrix f_modular = hermitian_function(modular, [&f](double x) { return f(x); });

  const Eigen::Map<const ComplexVector> vec_a(a.data(), d * d);
  const ComplexMatrix id = identity(d);
  const Eigen::Map<const ComplexVector> vec_id(id.data(), d * d);
  const Complex value = vec_id.dot(f_modular * vec_a);
  return ExtendedReal(value.real());
}

ExtendedReal oracle_quasi_relative_entropy(const DensityMatrix& a, const DensityMatrix& b,
                                           const GeneratorFunction& f) {
  return oracle_quasi_relative_entropy(a.matrix(), b.matrix(), f);
}

double perspective_sum(std::span<const double> weights, double c, const GeneratorFunction& f) {
  double sum = 0.0;
  for (const double w : weights) {
    if (w > kEpsZero) {
      sum += w * f.eval(c / w);
      continue;
    }
    const ExtendedReal limit = f.limit_at_inf_weighted(c);
    if (limit.is_infinite()) {
      throw UnsupportedLimit(f.name() +
                             ": lim x f(c/x) at x -> 0+ is infinite; zero weights unsupported");
    }
    sum += limit.value();
  }
  return sum;
}

std::vector<double> eigenvalues_of(const DensityMatrix& rho) {
  const RealVector ev = spectral_decompose(rho).eigenvalues;
  return {ev.data(), ev.data() + ev.size()};
}

double f_entropy(const DensityMatrix& rho, const GeneratorFunction& f) {
  const double inv_d = 1.0 / rho.dim();
  const auto lambda = eigenvalues_of(rho);
  return f.eval(inv_d) - perspective_sum(lambda, inv_d, f);
}

double f_entropy_hat(const DensityMatrix& rho, const GeneratorFunction& f) {
  const auto lambda = eigenvalues_of(rho);
  return -perspective_sum(lambda, 1.0, f);
}

double f_entropy(const DensityMatrix& rho, const GeneratorFunction& f, Variant v) {
  return v == Variant::plain ? f_entropy(rho, f) : f_entropy_hat(rho, f);
}

}  // namespace qcoh
