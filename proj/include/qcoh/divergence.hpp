#pragma once

#include <span>
#include <vector>

#include "qcoh/extended_real.hpp"
#include "qcoh/generator.hpp"
#include "qcoh/matrix.hpp"

namespace qcoh {

// Quasi-relative entropy S_f(A || B) from the spectral data of A and B:
//
//   S_f(A||B) = sum_{j,k} lambda_j f(mu_k / lambda_j) |<psi_k|phi_j>|^2
//
// Eigenvalues within 1e-12 of each other are grouped and overlaps summed per
// group pair, so the result does not depend on the basis chosen inside a
// degenerate eigenspace. Zero eigenvalues (<= kEpsZero) use the limits carried
// by f; a term that is infinite with overlap mass above kEpsZero makes the
// whole result +inf, below it the term is dropped (0 * inf := 0).
//
// The matrix overload accepts any positive semidefinite pair, e.g. B = I.
ExtendedReal quasi_relative_entropy(const DensityMatrix& a, const DensityMatrix& b,
                                    const GeneratorFunction& f);
ExtendedReal quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const GeneratorFunction& f);

// Brute-force reference: builds L_B R_A^{-1} as the d^2 x d^2 matrix
// (A^{-1})^T (x) B acting on column-major vec(X), applies f through its
// eigendecomposition and evaluates Tr(f(L_B R_A^{-1})(A)). Needs both
// arguments full rank (SingularState otherwise).
ExtendedReal oracle_quasi_relative_entropy(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const GeneratorFunction& f);
ExtendedReal oracle_quasi_relative_entropy(const DensityMatrix& a, const DensityMatrix& b,
                                           const GeneratorFunction& f);

// sum_j w_j f(c / w_j), with zero weights contributing lim_{x->0+} x f(c/x).
// Throws UnsupportedLimit when that limit is infinite and a weight is zero.
double perspective_sum(std::span<const double> weights, double c, const GeneratorFunction& f);

// S_f(rho) = f(1/d) - S_f(rho || I/d) = f(1/d) - sum_j lambda_j f(1/(d lambda_j))
double f_entropy(const DensityMatrix& rho, const GeneratorFunction& f);
// S^_f(rho) = -S_f(rho || I) = -sum_j lambda_j f(1/lambda_j)
double f_entropy_hat(const DensityMatrix& rho, const GeneratorFunction& f);

enum class Variant { plain, hat };

double f_entropy(const DensityMatrix& rho, const GeneratorFunction& f, Variant v);

// Descending eigenvalues of rho as a std::vector.
std::vector<double> eigenvalues_of(const DensityMatrix& rho);

}  // namespace qcoh
